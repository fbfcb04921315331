// Command line front end.
//
//   qgrass <kind> <n> <command> [options]
//
// kind: og | lg; command: basis | points | multiply | operator | spectrum |
// conjecture-o | verify.  Exit code 0 on success, 1 when a verification
// fails (verify, conjecture-o), 2 on usage errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgrass/partition.hpp"
#include "qgrass/peterson.hpp"
#include "qgrass/ring.hpp"
#include "qgrass/serialize.hpp"
#include "qgrass/spectral.hpp"
#include "qgrass/symfun.hpp"

namespace {

using namespace qgrass;

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::string residual_note(const char* what, double value, double bound) {
    std::ostringstream os;
    os << what << "=" << format_real(value) << " bound=" << format_real(bound);
    return os.str();
}

// The full identity suite for one (kind, n).  Everything here recomputes
// from scratch; nothing is trusted just because table construction passed.
std::vector<CheckResult> run_verify(Kind kind, int n) {
    std::vector<CheckResult> out;
    const EvaluationTables& t = evaluation_tables(kind, n);
    const int count = static_cast<int>(t.basis.size());

    {  // orthogonality, forward direction
        double weight = (kind == Kind::og) ? 1.0 : std::pow(t.points.front().scale(), n + 1.0);
        double expected_factor = (kind == Kind::og) ? 1.0 : std::ldexp(1.0, n);
        double worst = 0.0, scale = 0.0;
        for (int i = 0; i < count; ++i) {
            scale = std::max(scale, expected_factor * std::abs(t.schur_values[size_t(i)]));
            for (int j = 0; j < count; ++j) {
                Cplx sum{};
                for (int l = 0; l < count; ++l)
                    sum += t.m(i, l) * t.m(j, t.complement_index[size_t(l)]);
                sum *= weight;
                if (i == j) sum -= expected_factor * t.schur_values[size_t(i)];
                worst = std::max(worst, std::abs(sum));
            }
        }
        double rel = worst / scale;
        out.push_back({"orthogonality", rel <= 1e-8, residual_note("relative", rel, 1e-8)});
        out.push_back({"inverse-tables", t.identity_residual <= 1e-8,
                       residual_note("residual", t.identity_residual, 1e-8)});
    }

    {  // normalizers stay away from zero
        double least = std::abs(t.schur_values[0]);
        for (const Cplx& s : t.schur_values) least = std::min(least, std::abs(s));
        out.push_back({"normalizers", least > 1e-6, residual_note("min", least, 1e-6)});
    }

    {  // the points themselves
        bool count_ok = static_cast<int>(t.points.size()) == (1 << n);
        double worst_q = 0.0, worst_band = 0.0, worst_power = 0.0;
        for (const PetersonPoint& p : t.points) {
            worst_q = std::max(worst_q, std::abs(evaluate_q(p) - 1.0));
            worst_band = std::max(worst_band, band_relation_residual(p));
            PowerCheck pc = exclusive_power_check(p.tuple());
            worst_power = std::max({worst_power, pc.max_elementary, pc.top_square});
        }
        out.push_back({"point-count", count_ok, std::to_string(t.points.size()) + " points"});
        out.push_back({"q-evaluation", worst_q <= 1e-10, residual_note("residual", worst_q, 1e-10)});
        out.push_back(
            {"band-relations", worst_band <= 1e-9, residual_note("residual", worst_band, 1e-9)});
        out.push_back({"root-powers", worst_power <= 1e-10 * n,
                       residual_note("residual", worst_power, 1e-10 * n)});
    }

    {  // presentation of the ring
        PresentationReport rep = verify_presentation(kind, n);
        std::string detail = std::to_string(rep.checked) + " identities";
        for (const std::string& v : rep.violations) detail += "; " + v;
        out.push_back({"presentation", rep.ok(), detail});
    }

    {  // quantum Euler class against the normalizers, and nonvanishing
        RingElement e = quantum_euler(kind, n);
        double factor = (kind == Kind::og) ? 1.0 : std::ldexp(1.0, n + 1);
        double worst = 0.0, least = 1e300;
        for (int i = 0; i < count; ++i) {
            Cplx v = evaluate_at_point(e, i);
            Cplx want = factor * t.schur_values[size_t(i)];
            worst = std::max(worst, std::abs(v - want) / std::abs(want));
            least = std::min(least, std::abs(v));
        }
        out.push_back({"euler-values", worst <= 1e-8, residual_note("relative", worst, 1e-8)});
        out.push_back({"euler-nonzero", least > 1e-6, residual_note("min", least, 1e-6)});
    }

    {  // closed-form eigenpairs; all classes up to rank 5, a sample beyond
        std::vector<StrictPartition> lams;
        if (n <= 5) {
            lams = t.basis;
        } else {
            for (int r = 1; r <= n; ++r) lams.push_back(StrictPartition{{r}});
            lams.push_back(complement(StrictPartition{}, n));
        }
        double worst = 0.0;
        for (const StrictPartition& lam : lams) {
            CMatrix a = operator_matrix(kind, n, lam);
            double norm_a = inf_norm(a);
            for (const EigenPair& p : eigenpairs(kind, n, lam)) {
                double vmax = 0.0;
                for (Cplx c : p.vec) vmax = std::max(vmax, std::abs(c));
                double resid = 0.0;
                for (int r = 0; r < count; ++r) {
                    Cplx acc = -p.value * p.vec[size_t(r)];
                    for (int c = 0; c < count; ++c) acc += a(r, c) * p.vec[size_t(c)];
                    resid = std::max(resid, std::abs(acc));
                }
                worst = std::max(worst, resid / (norm_a * vmax));
            }
        }
        out.push_back({"eigen-residuals", worst <= 1e-8, residual_note("scaled", worst, 1e-8)});
    }

    {  // spectral conditions on c_1
        ConjectureOReport rep = conjecture_o(kind, n);
        bool census = rep.max_modulus_count == rep.fano;
        out.push_back({"conjecture-o", rep.pass() && census,
                       "T0=" + format_real(rep.t0) +
                           " max_modulus_count=" + std::to_string(rep.max_modulus_count)});
    }

    return out;
}

int cmd_basis(Kind, int n, const std::string& format, std::ostream& os) {
    auto basis = enumerate_strict(n);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& lam : basis) j.push_back(lam.to_string());
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "partition,weight,length\n";
        for (const auto& lam : basis)
            os << csv_quote(lam.to_string()) << "," << lam.weight() << "," << lam.length()
               << "\n";
    } else {
        for (const auto& lam : basis) os << lam.to_string() << "\n";
    }
    return 0;
}

int cmd_points(Kind kind, int n, const std::string& format, std::ostream& os) {
    auto pts = peterson_points(kind, n);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : pts) j.push_back(point_to_json(p));
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "point,doubled,parity,closed,t,coord,re,im\n";
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            for (size_t c = 0; c < p.coordinates().size(); ++c)
                os << i << "," << csv_quote(join_ints(p.tuple().doubled_indices())) << ","
                   << (p.tuple().parity() == Parity::even ? "e" : "o") << ","
                   << (p.tuple().is_closed() ? 1 : 0) << "," << format_real(p.scale()) << ","
                   << c << "," << format_real(p.coordinates()[c].real()) << ","
                   << format_real(p.coordinates()[c].imag()) << "\n";
        }
    } else {
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            os << "point " << i << ": I=(" << join_ints(p.tuple().doubled_indices())
               << ") parity=" << (p.tuple().parity() == Parity::even ? "e" : "o")
               << " closed=" << (p.tuple().is_closed() ? "yes" : "no")
               << " t=" << format_real(p.scale()) << " coords=[";
            for (size_t c = 0; c < p.coordinates().size(); ++c) {
                if (c) os << ", ";
                os << format_complex(p.coordinates()[c]);
            }
            os << "]\n";
        }
    }
    return 0;
}

int cmd_multiply(Kind kind, int n, const std::string& a_s, const std::string& b_s,
                 const std::string& format, std::ostream& os) {
    if (a_s.empty() || b_s.empty())
        throw std::invalid_argument("multiply needs --a and --b (use '0' for the unit)");
    RingElement a = RingElement::basis(kind, n, StrictPartition::parse(a_s));
    RingElement b = RingElement::basis(kind, n, StrictPartition::parse(b_s));
    RingElement prod = multiply(a, b);
    if (format == "json") {
        os << ring_to_json(prod).dump(2) << "\n";
    } else if (format == "csv") {
        os << "partition,q,coeff\n";
        for (const auto& term : ring_to_json(prod))
            os << csv_quote(term.at("partition").get<std::string>()) << ","
               << term.at("q").get<int>() << "," << term.at("coeff").get<long long>() << "\n";
    } else {
        os << a.to_string() << "\xc2\xb7" << b.to_string() << " = " << prod.to_string() << "\n";
    }
    return 0;
}

int cmd_operator(Kind kind, int n, const std::string& class_s, const std::string& format,
                 std::ostream& os) {
    if (class_s.empty()) throw std::invalid_argument("operator needs --class");
    StrictPartition lam = StrictPartition::parse(class_s);
    CMatrix a = operator_matrix(kind, n, lam);
    const EvaluationTables& t = evaluation_tables(kind, n);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < a.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < a.cols(); ++j)
                row.push_back({{"re", a(i, j).real()}, {"im", a(i, j).imag()}});
            rows.push_back(std::move(row));
        }
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& b : t.basis) labels.push_back(b.to_string());
        nlohmann::json j{{"kind", std::string(kind_name(kind))},
                         {"n", n},
                         {"class", lam.to_string()},
                         {"basis", labels},
                         {"entries", rows}};
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "row,col,re,im\n";
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) != Cplx{})
                    os << csv_quote(t.basis[size_t(i)].to_string()) << ","
                       << csv_quote(t.basis[size_t(j)].to_string()) << ","
                       << format_real(a(i, j).real()) << "," << format_real(a(i, j).imag())
                       << "\n";
    } else {
        os << "operator " << RingElement::basis(kind, n, lam).to_string() << " on "
           << a.rows() << " classes; nonzero entries (row <- col)\n";
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) != Cplx{})
                    os << t.basis[size_t(i)].to_string() << " <- " << t.basis[size_t(j)].to_string()
                       << ": " << format_real(a(i, j).real()) << "\n";
    }
    return 0;
}

int cmd_spectrum(Kind kind, int n, const std::string& class_s, const std::string& format,
                 std::ostream& os) {
    std::vector<Cplx> values;
    if (!class_s.empty()) {
        for (const EigenPair& p : eigenpairs(kind, n, StrictPartition::parse(class_s)))
            values.push_back(p.value);
    } else {
        values = c1_spectrum(kind, n);
    }
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (Cplx v : values) j.push_back({{"re", v.real()}, {"im", v.imag()}});
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "re,im\n";
        for (Cplx v : values)
            os << format_real(v.real()) << "," << format_real(v.imag()) << "\n";
    } else {
        for (Cplx v : values) os << format_complex(v) << "\n";
    }
    return 0;
}

int cmd_conjecture_o(Kind kind, int n, double tol, const std::string& format,
                     std::ostream& os) {
    ConjectureOReport rep = conjecture_o(kind, n, tol);
    if (format == "json") {
        os << report_to_json(rep).dump(2) << "\n";
    } else if (format == "csv") {
        os << "re,im,multiplicity\n";
        for (const SpectralCluster& c : rep.spectrum)
            os << format_real(c.value.real()) << "," << format_real(c.value.imag()) << ","
               << c.multiplicity << "\n";
    } else {
        os << "kind=" << kind_name(rep.kind) << " n=" << rep.n << " fano_index=" << rep.fano
           << "\n";
        os << "T0=" << format_real(rep.t0) << "\n";
        os << "spectrum (value x multiplicity):\n";
        for (const SpectralCluster& c : rep.spectrum)
            os << "  " << format_complex(c.value) << " x" << c.multiplicity << "\n";
        os << "cond1=" << (rep.cond1 ? "pass" : "FAIL") << " cond2="
           << (rep.cond2 ? "pass" : "FAIL") << " cond3=" << (rep.cond3 ? "pass" : "FAIL")
           << " max_modulus_count=" << rep.max_modulus_count << "\n";
        if (rep.indeterminate) os << "indeterminate: " << rep.note << "\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_verify(Kind kind, int n, const std::string& format, std::ostream& os) {
    std::vector<CheckResult> checks = run_verify(kind, n);
    bool all = true;
    for (const CheckResult& c : checks) all = all && c.pass;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const CheckResult& c : checks)
            rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        nlohmann::json j{
            {"kind", std::string(kind_name(kind))}, {"n", n}, {"checks", rows}, {"pass", all}};
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "name,pass,detail\n";
        for (const CheckResult& c : checks)
            os << c.name << "," << (c.pass ? 1 : 0) << "," << csv_quote(c.detail) << "\n";
    } else {
        for (const CheckResult& c : checks)
            os << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
        os << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum multiplication operators for LG(n) and OG(n)"};
    app.name("qgrass");
    std::string kind_s, command, class_s, a_s, b_s, format = "text", out_path;
    int n = 0;
    double tol = 1e-8;
    bool unsafe_n = false;
    app.add_option("kind", kind_s, "og | lg")->required();
    app.add_option("n", n, "rank, 2..8 by default")->required();
    app.add_option(
           "command", command,
           "basis | points | multiply | operator | spectrum | conjecture-o | verify")
        ->required();
    app.add_option("--class", class_s, "partition such as '2,1'; empty or '0' is the unit");
    app.add_option("--a", a_s, "left factor for multiply");
    app.add_option("--b", b_s, "right factor for multiply");
    app.add_option("--tol", tol, "clustering tolerance for conjecture-o");
    app.add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "write the report to this file");
    app.add_flag("--unsafe-n", unsafe_n, "allow ranks 9..12 (interpolation degrades)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ostringstream os;
    int code = 0;
    try {
        Kind kind = parse_kind(kind_s);
        if (n < 2) throw std::invalid_argument("rank must be at least 2");
        if (n > 12) throw std::invalid_argument("rank above 12 is not supported");
        if (n > 8 && !unsafe_n)
            throw std::invalid_argument("rank above 8 needs --unsafe-n");
        if (n > 8)
            std::cerr << "warning: rank " << n
                      << " runs close to the interpolation rounding tolerance\n";

        if (command == "basis")
            code = cmd_basis(kind, n, format, os);
        else if (command == "points")
            code = cmd_points(kind, n, format, os);
        else if (command == "multiply")
            code = cmd_multiply(kind, n, a_s, b_s, format, os);
        else if (command == "operator")
            code = cmd_operator(kind, n, class_s, format, os);
        else if (command == "spectrum")
            code = cmd_spectrum(kind, n, class_s, format, os);
        else if (command == "conjecture-o")
            code = cmd_conjecture_o(kind, n, tol, format, os);
        else if (command == "verify")
            code = cmd_verify(kind, n, format, os);
        else
            throw std::invalid_argument("unknown command '" + command + "'");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        f << os.str();
    }
    return code;
}
