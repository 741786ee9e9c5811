#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arithdeg/degree.hpp"
#include "arithdeg/report_io.hpp"
#include "arithdeg/verify.hpp"

namespace {

using namespace arithdeg;

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected one of text, json, csv");
}

DegreeReport evaluate(long long d_K, long long d_B, long long m,
                      const std::string& stack, bool allow_degenerate) {
    FieldData field = validate_field(d_K);
    if (stack == "Z") {
        if (d_B != 1)
            std::cerr << "note: --db is ignored for stack Z (no quaternion action)\n";
        return degree_z(field, m);
    }
    Setting setting(field, validate_quaternion(d_B, field, allow_degenerate));
    return degree_y(setting, m);
}

int cmd_degree(long long d_K, long long d_B, long long m, const std::string& stack,
               Format format, bool allow_degenerate) {
    DegreeReport rep = evaluate(d_K, d_B, m, stack, allow_degenerate);
    switch (format) {
        case Format::text: std::cout << format_text(rep); break;
        case Format::json: std::cout << format_json(rep) << "\n"; break;
        case Format::csv: std::cout << csv_header() << "\n" << format_csv_row(rep) << "\n"; break;
    }
    return 0;
}

int cmd_table(long long d_K, long long d_B, long long m_max, Format format,
              bool allow_degenerate) {
    FieldData field = validate_field(d_K);
    Setting setting(field, validate_quaternion(d_B, field, allow_degenerate));
    std::vector<DegreeReport> rows;
    rows.reserve(m_max > 0 ? static_cast<size_t>(m_max) : 0);
    for (long long m = 1; m <= m_max; ++m) rows.push_back(degree_y(setting, m));

    switch (format) {
        case Format::text: {
            std::cout << "m\t|Diff_B|\tp\tM\tR(M)\tcount\tlength\tdeg\n";
            for (const auto& r : rows) {
                std::cout << r.m << "\t" << r.diff.primes.size() << "\t";
                if (r.p)
                    std::cout << *r.p << "\t" << r.argument->str() << "\t" << *r.ideal_count
                              << "\t" << r.count << "\t" << r.length->str() << "\t";
                else
                    std::cout << "-\t-\t-\t" << r.count << "\t-\t";
                std::cout << r.degree_display() << "\n";
            }
            break;
        }
        case Format::csv: {
            std::cout << csv_header() << "\n";
            for (const auto& r : rows) std::cout << format_csv_row(r) << "\n";
            break;
        }
        case Format::json: {
            std::cout << "[";
            for (size_t i = 0; i < rows.size(); ++i)
                std::cout << (i ? ", " : "") << format_json(rows[i]);
            std::cout << "]\n";
            break;
        }
    }
    return 0;
}

int cmd_verify(const std::string& level) {
    VerifyLevel lv = level == "full" ? VerifyLevel::full : VerifyLevel::quick;
    std::vector<SuiteResult> results = run_verification(lv);
    int passed = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        std::cout << "suite " << i + 1 << "/" << results.size() << " " << r.name << ": "
                  << (r.passed ? "pass" : "FAIL") << " (" << r.cases << " cases)\n";
        if (!r.passed) std::cout << "  counterexample: " << r.counterexample << "\n";
        if (r.passed) ++passed;
    }
    std::cout << passed << "/" << results.size() << " suites passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "arithdeg: exact arithmetic degrees of special-endomorphism loci on "
        "quaternionic CM moduli, with every local ingredient auditable"};
    app.require_subcommand(1);

    long long d_K = 0, d_B = 1, m = 1, m_max = 0;
    std::string stack = "Y", format_name = "text", level = "quick";
    bool allow_degenerate = false;

    CLI::App* degree = app.add_subcommand(
        "degree", "Evaluate one arithmetic degree and print a full report");
    degree->add_option("--dk", d_K, "field discriminant d_K (negative)")->required();
    degree->add_option("--db", d_B, "quaternion discriminant d_B (squarefree)")->required();
    degree->add_option("--m", m, "positive integer m")->required();
    degree->add_option("--stack", stack, "which stack to evaluate (default Y)")
        ->check(CLI::IsMember({"Y", "Z"}));
    degree->add_option("--format", format_name, "text, json or csv (default text)");
    degree->add_flag("--allow-degenerate", allow_degenerate,
                     "admit the split d_B = 1 algebra (elliptic reduction mode)");

    CLI::App* table = app.add_subcommand(
        "table", "Evaluate m = 1..m-max on stack Y, one row per m");
    table->add_option("--dk", d_K, "field discriminant d_K (negative)")->required();
    table->add_option("--db", d_B, "quaternion discriminant d_B (squarefree)")->required();
    table->add_option("--m-max", m_max, "largest m to evaluate")->required();
    table->add_option("--format", format_name, "text, json or csv (default text)");
    table->add_flag("--allow-degenerate", allow_degenerate,
                    "admit the split d_B = 1 algebra (elliptic reduction mode)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the self-verification suites (closed forms vs oracles)");
    verify->add_option("--level", level, "quick or full (default quick)")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64; // 64: usage error; 0: --help and friends
    }

    try {
        if (degree->parsed()) return cmd_degree(d_K, d_B, m, stack,
                                                parse_format(format_name),
                                                allow_degenerate);
        if (table->parsed()) return cmd_table(d_K, d_B, m_max,
                                              parse_format(format_name),
                                              allow_degenerate);
        return cmd_verify(level);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const arithdeg::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arithdeg::bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
