#include "arithdeg/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace arithdeg {

namespace {

std::string approx_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string length_str(const Rational& r) {
    // lengths recorded in reports are integral; keep the general form anyway
    return r.str();
}

const char* diff_label(const DegreeReport& r) {
    return r.diff.variant == DiffVariant::quaternionic ? "Diff_B" : "Diff";
}

} // namespace

std::string format_text(const DegreeReport& r) {
    std::ostringstream os;
    if (r.stack == StackKind::surface_y) {
        os << "stack Y: d_K = " << r.field_disc << ", d_B = " << r.quaternion_disc
           << (r.degenerate ? " (degenerate)" : "") << ", m = " << r.m << "\n";
    } else {
        os << "stack Z: d_K = " << r.field_disc << ", m = " << r.m << "\n";
    }
    os << diff_label(r) << "(" << r.m << ") = " << r.diff.str() << "\n";
    if (!r.supported) {
        os << "deg = 0 (|" << diff_label(r) << "| = " << r.diff.primes.size() << ")\n";
        return os.str();
    }
    os << "p = " << *r.p << " (" << to_string(r.splitting->kind)
       << " in K, e = " << r.splitting->e << ", f = " << r.splitting->f
       << "), epsilon_p = " << *r.epsilon << "\n";
    os << "M = " << r.argument->str() << ", R(M) = " << *r.ideal_count
       << ", count = " << r.count << ", length = " << length_str(*r.length) << "\n";
    if (r.degree_coeff == 0) {
        os << "deg = 0 (empty fiber: p | d_B and ord_p(m) = 0)\n";
    } else {
        os << "deg = " << r.degree_display() << "  ~ " << approx_str(r.degree_approx())
           << "\n";
    }
    return os.str();
}

std::string format_json(const DegreeReport& r) {
    std::ostringstream os;
    os << "{\"m\": " << r.m << ", \"d_K\": " << r.field_disc << ", \"d_B\": "
       << r.quaternion_disc << ", \"degenerate\": " << (r.degenerate ? "true" : "false")
       << ", \"diff\": [";
    for (size_t i = 0; i < r.diff.primes.size(); ++i)
        os << (i ? ", " : "") << r.diff.primes[i];
    os << "], \"p\": ";
    if (r.p) {
        os << *r.p << ", \"splitting\": \"" << to_string(r.splitting->kind)
           << "\", \"epsilon_p\": " << *r.epsilon << ", \"M\": {\"num\": "
           << r.argument->numerator() << ", \"den\": " << r.argument->denominator()
           << "}, \"R_M\": " << *r.ideal_count << ", \"count\": " << r.count
           << ", \"length\": ";
        if (r.length->is_integer())
            os << r.length->num;
        else
            os << "{\"num\": " << r.length->num << ", \"den\": " << r.length->den << "}";
    } else {
        os << "null, \"splitting\": null, \"epsilon_p\": null, \"M\": null, "
              "\"R_M\": null, \"count\": "
           << r.count << ", \"length\": null";
    }
    os << ", \"degree_coeff\": " << r.degree_coeff << ", \"degree_approx\": "
       << approx_str(r.degree_approx()) << "}";
    return os.str();
}

DegreeReport parse_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    DegreeReport r;
    r.m = j.at("m").get<long long>();
    r.field_disc = j.at("d_K").get<long long>();
    r.quaternion_disc = j.at("d_B").get<long long>();
    r.degenerate = j.at("degenerate").get<bool>();
    r.diff.primes = j.at("diff").get<std::vector<long long>>();
    // the variant and stack are not serialized; both are determined by the
    // discriminant/degenerate combination used to build the report
    bool quaternionic = r.quaternion_disc != 1 || r.degenerate;
    r.diff.variant = quaternionic ? DiffVariant::quaternionic : DiffVariant::plain;
    r.stack = quaternionic ? StackKind::surface_y : StackKind::elliptic_z;
    r.supported = !j.at("p").is_null();
    r.count = j.at("count").get<long long>();
    r.degree_coeff = j.at("degree_coeff").get<long long>();
    if (r.supported) {
        long long p = j.at("p").get<long long>();
        r.p = p;
        std::string kind = j.at("splitting").get<std::string>();
        int e = kind == "ramified" ? 2 : 1;
        int f = kind == "inert" ? 2 : 1;
        r.splitting = SplittingData{
            p,
            kind == "ramified" ? SplitKind::ramified
                               : (kind == "inert" ? SplitKind::inert : SplitKind::split),
            e, f};
        r.epsilon = j.at("epsilon_p").get<int>();
        const auto& m_json = j.at("M");
        r.argument = factorize(m_json.at("num").get<long long>()) /
                     factorize(m_json.at("den").get<long long>());
        r.ideal_count = j.at("R_M").get<long long>();
        const auto& len = j.at("length");
        if (len.is_object())
            r.length = Rational(len.at("num").get<long long>(), len.at("den").get<long long>());
        else
            r.length = Rational(len.get<long long>());
    }
    return r;
}

std::string csv_header() { return "m,diff_size,p,M,R_M,count,length,degree_coeff"; }

std::string format_csv_row(const DegreeReport& r) {
    std::ostringstream os;
    os << r.m << "," << r.diff.primes.size() << ",";
    if (r.p) {
        os << *r.p << "," << r.argument->str() << "," << *r.ideal_count << "," << r.count
           << "," << length_str(*r.length) << "," << r.degree_coeff;
    } else {
        os << ",,," << r.count << ",," << r.degree_coeff;
    }
    return os.str();
}

} // namespace arithdeg
