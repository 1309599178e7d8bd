#include "swfilm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "swfilm/errors.hpp"

namespace swfilm {

std::string format_number(double v) {
    if (!std::isfinite(v)) return "NaN";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_header(bool with_oracle) {
    return with_oracle
               ? "omega_ratio,d_nm,theta_deg,eps1,eps2,T,R,A,T_oracle,R_oracle,A_oracle,"
                 "terms_used,tail_bound"
               : "omega_ratio,d_nm,theta_deg,eps1,eps2,T,R,A,terms_used,tail_bound";
}

namespace {

std::string sanitize(const std::string& msg) {
    std::string out = msg;
    for (char& c : out)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return out;
}

} // namespace

std::string csv_line(const SweepRow& row, bool with_oracle) {
    std::ostringstream os;
    os << format_number(row.omega_ratio) << ',' << format_number(row.d_nm) << ','
       << format_number(row.theta_deg) << ',' << format_number(row.eps1) << ','
       << format_number(row.eps2) << ',' << format_number(row.transmittance) << ','
       << format_number(row.reflectance) << ',' << format_number(row.absorptance);
    if (with_oracle)
        os << ',' << format_number(row.oracle_transmittance) << ','
           << format_number(row.oracle_reflectance) << ','
           << format_number(row.oracle_absorptance);
    if (row.ok())
        os << ',' << row.terms_used << ',' << format_number(row.tail_bound);
    else
        os << ",NaN,NaN," << sanitize(row.error);
    return os.str();
}

std::string csv_document(const std::vector<SweepRow>& rows, bool with_oracle) {
    std::string out = csv_header(with_oracle);
    out += '\n';
    for (const SweepRow& row : rows) {
        out += csv_line(row, with_oracle);
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<SweepRow>& rows, bool with_oracle, std::ostream& os) {
    os << csv_document(rows, with_oracle);
}

void emit_csv_file(const std::vector<SweepRow>& rows, bool with_oracle, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path);
    f << csv_document(rows, with_oracle);
    f.flush();
    if (!f) throw IoError("failed writing output file: " + path);
}

} // namespace swfilm
