#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "swfilm/sweep.hpp"

// CSV serialization of sweep rows. Numbers are written in their shortest
// round-trip decimal form, separator ',', terminator LF, so identical runs
// produce byte-identical files. Rows carrying a model error print NaN in
// every computed field plus a trailing message column.

namespace swfilm {

// Shortest round-trip decimal form of v; "NaN" if v is not finite.
std::string format_number(double v);

std::string csv_header(bool with_oracle);

std::string csv_line(const SweepRow& row, bool with_oracle);

std::string csv_document(const std::vector<SweepRow>& rows, bool with_oracle);

void emit_csv(const std::vector<SweepRow>& rows, bool with_oracle, std::ostream& os);

// Throws IoError if the destination cannot be written.
void emit_csv_file(const std::vector<SweepRow>& rows, bool with_oracle, const std::string& path);

} // namespace swfilm
