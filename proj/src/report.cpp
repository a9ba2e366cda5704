#include "hodgestar/report.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hodgestar/electrodynamics.hpp"
#include "hodgestar/hodge_theory.hpp"
#include "hodgestar/metric.hpp"
#include "hodgestar/multivector.hpp"
#include "hodgestar/simplicial.hpp"

namespace hodgestar {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::uint32_t> blades_in_order(int n) {
    std::vector<std::uint32_t> bits;
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) bits.push_back(b);
    std::sort(bits.begin(), bits.end(), BladeOrder{});
    return bits;
}

std::string frame_label(std::uint32_t bits) {
    if (bits == 0) return "1";
    std::string out;
    for (int a : Blade{bits}.indices()) {
        if (!out.empty()) out += '^';
        out += 'e';
        out += std::to_string(a);
    }
    return out;
}

std::string chart_label(std::uint32_t bits) {
    if (bits == 0) return "1";
    std::string out;
    for (int a : Blade{bits}.axes()) {
        if (!out.empty()) out += '^';
        out += "dx";
        out += std::to_string(a);
    }
    return out;
}

std::string single_term(const Rational& c, std::uint32_t bits,
                        std::string (*label)(std::uint32_t)) {
    if (c == 0) return "0";
    if (bits == 0) return to_string(c);
    if (c == 1) return label(bits);
    if (c == -1) return "-" + label(bits);
    return to_string(c) + "*" + label(bits);
}

// Single-blade multivectors (complements, stars of blades) as one signed term.
std::string single_term(const Multivector& m, std::string (*label)(std::uint32_t)) {
    if (m.is_zero()) return "0";
    const auto& [bits, coef] = *m.terms().begin();
    return single_term(coef, bits, label);
}

Multivector basis_blade(int n, std::uint32_t bits) {
    Multivector m(n);
    m.add_term(bits, Rational(1));
    return m;
}

Multivector random_homogeneous(int n, int grade, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Multivector m(n);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits)
        if (std::popcount(bits) == grade)
            m.add_term(bits, make_rational(num(rng), den(rng)));
    return m;
}

std::string verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string fmt(double x) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << x;
    return out.str();
}

}  // namespace

Report cmd_algebra(int dim, const std::string& check, unsigned long seed) {
    const int n = dim;
    std::ostringstream text;
    Json json;
    json["command"] = "algebra";
    json["dim"] = n;
    json["seed"] = seed;
    json["check"] = check;
    bool pass = true;

    text << "algebra --dim " << n << " --check " << check << "\n";
    const bool want_double = check == "all" || check == "double-complement";
    const bool want_product = check == "all" || check == "product-complement";

    if (want_double) {
        text << "\nblade            complement       double           sign  expected  ok\n";
        Json rows = Json::array();
        bool law = true;
        for (std::uint32_t bits : blades_in_order(n)) {
            Multivector b = basis_blade(n, bits);
            Multivector comp = complement(b);
            Multivector twice = complement(comp);
            const int k = std::popcount(bits);
            const int expected = (k * (n - k)) % 2 == 0 ? 1 : -1;
            Rational got = twice.coefficient(Blade{bits});
            bool ok = twice == Rational(expected) * b && got == expected;
            law = law && ok;
            text << std::left << std::setw(17) << frame_label(bits) << std::setw(17)
                 << single_term(comp, frame_label) << std::setw(17)
                 << single_term(twice, frame_label) << std::setw(6) << to_string(got)
                 << std::setw(10) << (expected > 0 ? "+1" : "-1") << (ok ? "yes" : "NO")
                 << "\n";
            rows.push_back({{"blade", frame_label(bits)},
                            {"complement", single_term(comp, frame_label)},
                            {"sign", to_string(got)},
                            {"expected", expected},
                            {"ok", ok}});
        }
        json["rows"] = rows;
        json["double_complement"] = {{"cases", 1 << n}, {"pass", law}};
        text << "double-complement law: " << (1 << n) << "/" << (1 << n)
             << " blades  " << verdict(law) << "\n";
        pass = pass && law;
    }

    if (want_product) {
        std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
        std::uniform_int_distribution<int> pick_k(0, n);
        const int cases = 100;
        int good = 0;
        for (int t = 0; t < cases; ++t) {
            int k = pick_k(rng);
            std::uniform_int_distribution<int> pick_l(0, n - k);
            int l = pick_l(rng);
            Multivector a = random_homogeneous(n, k, rng);
            Multivector b = random_homogeneous(n, l, rng);
            if (complement(wedge(a, b)) ==
                regressive_product(complement(a), complement(b)))
                ++good;
        }
        bool law = good == cases;
        json["product_complement"] = {{"cases", cases}, {"exact", good}, {"pass", law}};
        text << "product-complement law: " << good << "/" << cases
             << " random pairs exact  " << verdict(law) << "\n";
        pass = pass && law;
    }

    if (check == "all" && n == 3) {
        Multivector e1 = basis_blade(3, 1), e2 = basis_blade(3, 2), e3 = basis_blade(3, 4);
        bool cyc = cross_product(e1, e2) == e3 && cross_product(e2, e3) == e1 &&
                   cross_product(e3, e1) == e2;
        json["cross_cyclic"] = cyc;
        text << "cross product cyclic on e1,e2,e3: " << verdict(cyc) << "\n";
        pass = pass && cyc;
    }

    text << "verdict: " << verdict(pass) << "\n";
    json["pass"] = pass;
    return Report{pass, text.str(), json.dump(2) + "\n"};
}

Report cmd_star(const std::string& signature, int orientation) {
    Metric g = Metric::from_signature(signature, orientation);
    const int n = g.n;
    std::ostringstream text;
    Json json;
    json["command"] = "star";
    json["signature"] = g.signature_string();
    json["orientation"] = orientation;

    const bool euclidean_oriented =
        orientation == 1 && g.det_sign() == 1 &&
        std::all_of(g.signature.begin(), g.signature.end(), [](int s) { return s == 1; });

    bool pass = true;
    text << "star --sig " << g.signature_string() << " --orientation " << orientation
         << "\n\nblade            star             double  expected  complement?\n";
    Json rows = Json::array();
    for (std::uint32_t bits : blades_in_order(n)) {
        Multivector b = basis_blade(n, bits);
        Multivector starred = hodge_star(b, g);
        Multivector twice = hodge_star(starred, g);
        const int k = std::popcount(bits);
        const int expected = double_star_sign(k, g);
        Rational got = twice.coefficient(Blade{bits});
        bool law = twice == Rational(expected) * b;
        bool comp = starred == complement(b);
        pass = pass && law && (!euclidean_oriented || comp);
        text << std::left << std::setw(17) << chart_label(bits) << std::setw(17)
             << single_term(starred, chart_label) << std::setw(8) << to_string(got)
             << std::setw(10) << (expected > 0 ? "+1" : "-1") << (comp ? "yes" : "no")
             << "\n";
        rows.push_back({{"blade", chart_label(bits)},
                        {"star", single_term(starred, chart_label)},
                        {"double_sign", to_string(got)},
                        {"expected", expected},
                        {"equals_complement", comp}});
    }
    json["rows"] = rows;
    if (euclidean_oriented)
        text << "Euclidean positive orientation: star must equal the complement on "
                "every blade\n";
    text << "double-star law sign(det g)*(-1)^(k(n-k)): " << verdict(pass) << "\n";
    text << "verdict: " << verdict(pass) << "\n";
    json["pass"] = pass;
    return Report{pass, text.str(), json.dump(2) + "\n"};
}

namespace {

Json poly_triple(const std::array<Polynomial, 3>& p) {
    return Json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}

Rational triple_l1(const std::array<Polynomial, 3>& p) {
    return p[0].coefficient_l1() + p[1].coefficient_l1() + p[2].coefficient_l1();
}

}  // namespace

Report cmd_maxwell(const std::string& config_path, const std::string& formulation,
                   const std::string& units) {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot open " + config_path);
    FieldConfig cfg = parse_field_config(in);
    if (units == "hl") cfg.gaussian_4pi = false;
    if (units == "gaussian") cfg.gaussian_4pi = true;

    FaradayForm F = assemble_faraday(cfg);
    ExcitationForm G = assemble_excitation(cfg);
    CurrentForms S = assemble_currents(cfg);

    std::ostringstream text;
    Json json;
    json["command"] = "maxwell";
    json["config"] = config_path;
    json["formulation"] = formulation;
    json["units"] = cfg.gaussian_4pi ? "gaussian" : "hl";
    json["source_scale"] = to_string(source_scale(cfg));
    json["rho"] = to_string(cfg.rho);

    text << "maxwell --config " << config_path << " --formulation " << formulation
         << " --units " << (cfg.gaussian_4pi ? "gaussian" : "hl") << "\n";
    text << "source scale k = " << to_string(source_scale(cfg)) << ", rho = "
         << to_string(cfg.rho) << "\n\n";

    bool pass = true;
    Json checks;
    auto want = [&](const char* name) {
        return formulation == "all" || formulation == name;
    };

    if (want("premetric")) {
        MaxwellResiduals r = check_maxwell_premetric(F, G, S);
        bool ok = r.pass();
        pass = pass && ok;
        text << "premetric   |dF| = " << to_string(r.first.coefficient_l1())
             << " ; |dG - S| = " << to_string(r.second.coefficient_l1())
             << " ; |dS| = " << to_string(r.continuity.coefficient_l1()) << "   "
             << verdict(ok) << "\n";
        checks["premetric"] = {{"dF", to_string(r.first.coefficient_l1())},
                               {"dG_minus_S", to_string(r.second.coefficient_l1())},
                               {"dS", to_string(r.continuity.coefficient_l1())},
                               {"pass", ok}};
    }
    if (want("metric")) {
        MaxwellResiduals r = check_maxwell_metric(F, cfg);
        bool ok = r.pass();
        pass = pass && ok;
        text << "metric      |dF| = " << to_string(r.first.coefficient_l1())
             << " ; |d*F - S| = " << to_string(r.second.coefficient_l1())
             << " ; |dS| = " << to_string(r.continuity.coefficient_l1()) << "   "
             << verdict(ok) << "\n";
        checks["metric"] = {{"dF", to_string(r.first.coefficient_l1())},
                            {"dstarF_minus_S", to_string(r.second.coefficient_l1())},
                            {"dS", to_string(r.continuity.coefficient_l1())},
                            {"pass", ok}};
    }
    if (want("classical")) {
        ClassicalCorrespondence r = classical_correspondence(cfg);
        bool ok = r.pass();
        pass = pass && ok;
        text << "classical   |curl E + dB/dx0| = " << to_string(triple_l1(r.faraday))
             << " ; |div B| = " << to_string(r.div_b.coefficient_l1())
             << " ; |curl H - dD/dx0 - kJ| = " << to_string(triple_l1(r.ampere))
             << " ; |div D - k rho| = " << to_string(r.gauss.coefficient_l1())
             << " ; table match " << (r.forms_match_components ? "yes" : "NO")
             << " ; B = complement " << (r.b_form_is_complement ? "yes" : "NO")
             << "   " << verdict(ok) << "\n";
        checks["classical"] = {{"faraday", poly_triple(r.faraday)},
                               {"div_B", to_string(r.div_b)},
                               {"ampere", poly_triple(r.ampere)},
                               {"gauss", to_string(r.gauss)},
                               {"forms_match_components", r.forms_match_components},
                               {"b_form_is_complement", r.b_form_is_complement},
                               {"pass", ok}};
    }
    if (want("minkowski")) {
        ComponentResiduals r = check_maxwell_components(cfg);
        bool ok = r.pass();
        pass = pass && ok;
        Rational h = r.homogeneous[0].coefficient_l1() + r.homogeneous[1].coefficient_l1() +
                     r.homogeneous[2].coefficient_l1() + r.homogeneous[3].coefficient_l1();
        Rational s = r.source[0].coefficient_l1() + r.source[1].coefficient_l1() +
                     r.source[2].coefficient_l1() + r.source[3].coefficient_l1();
        text << "minkowski   |div F*| = " << to_string(h)
             << " ; |div f - k s| = " << to_string(s) << "   " << verdict(ok) << "\n";
        Json hom = Json::array(), src = Json::array();
        for (int mu = 0; mu < 4; ++mu) {
            hom.push_back(to_string(r.homogeneous[static_cast<std::size_t>(mu)]));
            src.push_back(to_string(r.source[static_cast<std::size_t>(mu)]));
        }
        checks["minkowski"] = {{"homogeneous", hom}, {"source", src}, {"pass", ok}};
    }

    json["checks"] = checks;
    text << "\nverdict: " << verdict(pass) << "\n";
    json["pass"] = pass;
    return Report{pass, text.str(), json.dump(2) + "\n"};
}

Report cmd_betti(const std::string& mesh_path) {
    SimplicialComplex complex = load_complex_file(mesh_path);
    std::vector<int> harmonic = betti_via_harmonic(complex);
    std::vector<int> oracle = betti_via_rank(complex);
    FloatingBetti floating = betti_via_harmonic_floating(complex);

    std::ostringstream text;
    Json json;
    json["command"] = "betti";
    json["mesh"] = mesh_path;
    text << "betti " << mesh_path << "\ncells:";
    Json counts = Json::array();
    for (int k = 0; k <= complex.dimension(); ++k) {
        text << " " << complex.cell_count(k);
        counts.push_back(complex.cell_count(k));
    }
    json["cells"] = counts;
    long long chi = complex.euler_characteristic();
    text << "   chi = " << chi << "\n\nk  harmonic  oracle  floating  equal\n";
    json["euler_characteristic"] = chi;

    bool pass = true;
    long long alt = 0;
    Json rows = Json::array();
    for (int k = 0; k <= complex.dimension(); ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        bool eq = harmonic[i] == oracle[i] && harmonic[i] == floating.betti[i];
        pass = pass && eq;
        alt += (k % 2 == 0 ? 1 : -1) * harmonic[i];
        text << k << "  " << std::left << std::setw(10) << harmonic[i] << std::setw(8)
             << oracle[i] << std::setw(10) << floating.betti[i] << (eq ? "yes" : "NO")
             << "\n";
        rows.push_back({{"k", k},
                        {"harmonic", harmonic[i]},
                        {"oracle", oracle[i]},
                        {"floating", floating.betti[i]},
                        {"equal", eq}});
    }
    json["rows"] = rows;
    pass = pass && floating.gap_ok && alt == chi;
    text << "spectral gap ok: " << (floating.gap_ok ? "yes" : "NO");
    if (std::isfinite(floating.worst_gap)) text << " (worst " << fmt(floating.worst_gap) << ")";
    text << "\nEuler check sum (-1)^k b_k = chi: " << (alt == chi ? "yes" : "NO") << "\n";
    json["gap_ok"] = floating.gap_ok;
    json["mode"] = "exact+float";
    text << "verdict: " << verdict(pass) << "\n";
    json["pass"] = pass;
    return Report{pass, text.str(), json.dump(2) + "\n"};
}

Report cmd_decompose(const std::string& mesh_path, const std::string& cochain_path) {
    SimplicialComplex complex = load_complex_file(mesh_path);
    Cochain c = load_cochain_file(cochain_path, complex);
    const int k = c.degree;

    HodgeDecomposition parts = hodge_decompose(complex, k, c.values);
    const double scale = std::max(1.0, c.values.size() > 0 ? c.values.norm() : 0.0);
    const double r_exact_coexact =
        std::abs(parts.exact.dot(parts.coexact)) / (scale * scale);
    const double r_exact_harmonic =
        std::abs(parts.exact.dot(parts.harmonic)) / (scale * scale);
    const double r_coexact_harmonic =
        std::abs(parts.coexact.dot(parts.harmonic)) / (scale * scale);
    const double r_reconstruct =
        (c.values - parts.exact - parts.coexact - parts.harmonic).norm() / scale;
    Eigen::MatrixXd d_up = complex.coboundary_matrix(k).cast<double>();
    Eigen::MatrixXd d_down_t = complex.coboundary_matrix(k - 1).transpose().cast<double>();
    double r_harmonicity = 0.0;
    if (d_up.rows() > 0)
        r_harmonicity = std::max(r_harmonicity, (d_up * parts.harmonic).norm() / scale);
    if (d_down_t.rows() > 0)
        r_harmonicity =
            std::max(r_harmonicity, (d_down_t * parts.harmonic).norm() / scale);

    // The float cochain values are exact rationals, so the rational route
    // runs on identical input.
    RationalHodgeDecomposition exact_parts =
        hodge_decompose_exact(complex, k, to_rational(c.values));
    bool exact_orthogonal =
        exact_parts.exact.dot(exact_parts.coexact) == 0 &&
        exact_parts.exact.dot(exact_parts.harmonic) == 0 &&
        exact_parts.coexact.dot(exact_parts.harmonic) == 0;
    RationalMatrix rd_up = to_rational(complex.coboundary_matrix(k));
    RationalMatrix rd_down = to_rational(complex.coboundary_matrix(k - 1));
    bool exact_harmonic = (rd_up * exact_parts.harmonic).isZero() &&
                          (rd_down.transpose() * exact_parts.harmonic).isZero();

    bool pass = r_exact_coexact <= 1e-10 && r_exact_harmonic <= 1e-10 &&
                r_coexact_harmonic <= 1e-10 && r_reconstruct <= 1e-10 &&
                r_harmonicity <= 1e-8 && exact_orthogonal && exact_harmonic;

    std::ostringstream text;
    text << "decompose " << mesh_path << " " << cochain_path << "\ndegree " << k
         << ", cells " << complex.cell_count(k) << "\n\n";
    text << "|c| = " << fmt(c.values.norm()) << "\n|exact| = " << fmt(parts.exact.norm())
         << "\n|coexact| = " << fmt(parts.coexact.norm())
         << "\n|harmonic| = " << fmt(parts.harmonic.norm()) << "\n";
    text << "orthogonality residuals: " << fmt(r_exact_coexact) << " "
         << fmt(r_exact_harmonic) << " " << fmt(r_coexact_harmonic)
         << " (tol 1e-10)\n";
    text << "reconstruction residual: " << fmt(r_reconstruct) << " (tol 1e-10)\n";
    text << "harmonic part in ker d and ker d^T (float): " << fmt(r_harmonicity)
         << " (tol 1e-8)\n";
    text << "exact route: orthogonal " << (exact_orthogonal ? "yes" : "NO")
         << ", harmonic annihilated " << (exact_harmonic ? "yes" : "NO") << "\n";
    text << "verdict: " << verdict(pass) << "\n";

    Json json;
    json["command"] = "decompose";
    json["mesh"] = mesh_path;
    json["cochain"] = cochain_path;
    json["degree"] = k;
    json["norms"] = {{"input", c.values.norm()},
                     {"exact", parts.exact.norm()},
                     {"coexact", parts.coexact.norm()},
                     {"harmonic", parts.harmonic.norm()}};
    json["orthogonality"] = {r_exact_coexact, r_exact_harmonic, r_coexact_harmonic};
    json["reconstruction"] = r_reconstruct;
    json["harmonicity"] = r_harmonicity;
    json["exact_route"] = {{"orthogonal", exact_orthogonal},
                           {"harmonic_annihilated", exact_harmonic}};
    json["mode"] = "exact+float";
    json["pass"] = pass;
    return Report{pass, text.str(), json.dump(2) + "\n"};
}

}  // namespace hodgestar
