#include "hodgestar/electrodynamics.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace hodgestar {

namespace {

constexpr int kChartDim = 4;

std::uint32_t bit(int axis) { return std::uint32_t{1} << axis; }
std::uint32_t blade2(int a, int b) { return bit(a) | bit(b); }
std::uint32_t blade3(int a, int b, int c) { return bit(a) | bit(b) | bit(c); }

// (i, j, k) cyclic over (1, 2, 3): the spatial arrangement that represents a
// 3-vector as a 2-form, V_i on dx_j^dx_k.
constexpr int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

// Adds V_i dx_j^dx_k over the cyclic arrangement (signs land in the canonical
// ascending coefficients).
void add_spatial_vector(PolyForm& form, const std::array<Polynomial, 3>& v,
                        const Rational& scale = Rational(1)) {
    for (const auto& [i, j, k] : kCyclic) {
        std::uint32_t target = blade2(j, k);
        Polynomial coeff = scale * v[static_cast<std::size_t>(i - 1)];
        form.add_term(target, j < k ? coeff : -coeff);
    }
}

// Adds V_i dx0^dx_i (time blades, ascending already).
void add_time_vector(PolyForm& form, const std::array<Polynomial, 3>& v,
                     const Rational& scale) {
    for (int i = 1; i <= 3; ++i)
        form.add_term(blade2(0, i), scale * v[static_cast<std::size_t>(i - 1)]);
}

std::array<Polynomial, 3> curl(const std::array<Polynomial, 3>& v) {
    auto at = [&](int i) -> const Polynomial& { return v[static_cast<std::size_t>(i - 1)]; };
    return {at(3).derivative(2) - at(2).derivative(3),
            at(1).derivative(3) - at(3).derivative(1),
            at(2).derivative(1) - at(1).derivative(2)};
}

Polynomial divergence(const std::array<Polynomial, 3>& v) {
    return v[0].derivative(1) + v[1].derivative(2) + v[2].derivative(3);
}

std::array<Polynomial, 3> d_dx0(const std::array<Polynomial, 3>& v) {
    return {v[0].derivative(0), v[1].derivative(0), v[2].derivative(0)};
}

}  // namespace

FieldConfig::FieldConfig()
    : E{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim)},
      B{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim)},
      D{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim)},
      H{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim)},
      J{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim)},
      rho(kChartDim) {}

Rational source_scale(const FieldConfig& cfg) {
    return cfg.gaussian_4pi ? Rational(-4) : Rational(1);
}

FaradayForm assemble_faraday(const FieldConfig& cfg) {
    PolyForm F(Metric::minkowski());
    add_spatial_vector(F, cfg.B);
    add_time_vector(F, cfg.E, Rational(-1));
    return FaradayForm{F};
}

ExcitationForm assemble_excitation(const FieldConfig& cfg) {
    PolyForm G(Metric::minkowski());
    add_spatial_vector(G, cfg.D);
    add_time_vector(G, cfg.H, Rational(1));
    return ExcitationForm{G};
}

PolyForm minkowski_excitation(const FieldConfig& cfg) {
    PolyForm f(Metric::minkowski());
    add_spatial_vector(f, cfg.H);
    add_time_vector(f, cfg.D, Rational(-1));
    return f;
}

CurrentForms assemble_currents(const FieldConfig& cfg) {
    const Rational k = source_scale(cfg);
    PolyForm j(Metric::minkowski());
    j.add_term(bit(0), k * cfg.rho);
    for (int i = 1; i <= 3; ++i)
        j.add_term(bit(i), Rational(-k) * cfg.J[static_cast<std::size_t>(i - 1)]);
    return CurrentForms{j, hodge_star(j)};
}

MaxwellResiduals check_maxwell_premetric(const FaradayForm& F, const ExcitationForm& G,
                                         const CurrentForms& S) {
    return MaxwellResiduals{d(F.form), d(G.form) - S.S, d(S.S)};
}

MaxwellResiduals check_maxwell_metric(const FaradayForm& F, const FieldConfig& cfg) {
    CurrentForms S = assemble_currents(cfg);
    return MaxwellResiduals{d(F.form), d(hodge_star(F.form)) - S.S, d(S.S)};
}

bool ComponentResiduals::pass() const {
    for (const Polynomial& p : homogeneous)
        if (!p.is_zero()) return false;
    for (const Polynomial& p : source)
        if (!p.is_zero()) return false;
    return true;
}

ComponentResiduals check_maxwell_components(const FieldConfig& cfg) {
    const Metric g = Metric::minkowski();
    const Rational k = source_scale(cfg);
    PolyForm Fdual(g);
    {
        // minkowski_dual on polynomial coefficients, bladewise.
        PolyForm F = assemble_faraday(cfg).form;
        for (const auto& [bits, p] : F.terms()) {
            std::uint32_t target = full_mask(kChartDim) & ~bits;
            Fdual.add_term(target, merge_sign(target, bits) < 0 ? -p : p);
        }
    }
    PolyForm f = minkowski_excitation(cfg);

    auto entry = [](const PolyForm& form, int row, int col) -> Polynomial {
        // Antisymmetric component (row, col) from ascending storage.
        if (row == col) return Polynomial::zero(kChartDim);
        Polynomial p = form.coefficient(blade2(std::min(row, col), std::max(row, col)));
        return row < col ? p : -p;
    };

    std::array<Polynomial, 4> s = {k * cfg.rho, k * cfg.J[0], k * cfg.J[1], k * cfg.J[2]};

    ComponentResiduals out{{Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim),
                            Polynomial(kChartDim)},
                           {Polynomial(kChartDim), Polynomial(kChartDim), Polynomial(kChartDim),
                            Polynomial(kChartDim)}};
    for (int mu = 0; mu < 4; ++mu) {
        Polynomial hom(kChartDim), src(kChartDim);
        for (int nu = 0; nu < 4; ++nu) {
            if (nu == mu) continue;
            // Homogeneous half: plain divergence, no metric (the dual matrix
            // equations are premetric).
            hom = hom + entry(Fdual, mu, nu).derivative(nu);
            // Source half: raised components f^{mu nu} of the six-component
            // excitation.
            int raise_sign = g.signature[static_cast<std::size_t>(mu)] *
                             g.signature[static_cast<std::size_t>(nu)];
            Polynomial fr = entry(f, mu, nu);
            src = src + (raise_sign < 0 ? -fr : fr).derivative(nu);
        }
        out.homogeneous[static_cast<std::size_t>(mu)] = hom;
        out.source[static_cast<std::size_t>(mu)] = src - s[static_cast<std::size_t>(mu)];
    }
    return out;
}

bool ClassicalCorrespondence::pass() const {
    if (!forms_match_components || !b_form_is_complement) return false;
    for (const Polynomial& p : faraday)
        if (!p.is_zero()) return false;
    for (const Polynomial& p : ampere)
        if (!p.is_zero()) return false;
    return div_b.is_zero() && gauss.is_zero();
}

ClassicalCorrespondence classical_correspondence(const FieldConfig& cfg) {
    const Rational k = source_scale(cfg);

    std::array<Polynomial, 3> faraday = curl(cfg.E);
    {
        std::array<Polynomial, 3> bdot = d_dx0(cfg.B);
        for (int i = 0; i < 3; ++i) faraday[i] = faraday[i] + bdot[i];
    }
    std::array<Polynomial, 3> ampere = curl(cfg.H);
    {
        std::array<Polynomial, 3> ddot = d_dx0(cfg.D);
        for (int i = 0; i < 3; ++i)
            ampere[i] = ampere[i] - ddot[i] - k * cfg.J[static_cast<std::size_t>(i)];
    }
    Polynomial div_b = divergence(cfg.B);
    Polynomial gauss = divergence(cfg.D) - k * cfg.rho;

    PolyForm dF = d(assemble_faraday(cfg).form);
    PolyForm dGS = d(assemble_excitation(cfg).form) - assemble_currents(cfg).S;

    bool match = dF.coefficient(blade3(0, 1, 2)) == faraday[2] &&
                 dF.coefficient(blade3(0, 1, 3)) == -faraday[1] &&
                 dF.coefficient(blade3(0, 2, 3)) == faraday[0] &&
                 dF.coefficient(blade3(1, 2, 3)) == div_b &&
                 dGS.coefficient(blade3(0, 1, 2)) == -ampere[2] &&
                 dGS.coefficient(blade3(0, 1, 3)) == ampere[1] &&
                 dGS.coefficient(blade3(0, 2, 3)) == -ampere[0] &&
                 dGS.coefficient(blade3(1, 2, 3)) == gauss;

    // The spatial half of F must place each B_i exactly where the 3-D frame
    // complement places e_i (blade and sign), so the 2-form representation of
    // B is the Grassmann complement of the B vector.
    bool b_complement = true;
    {
        PolyForm F = assemble_faraday(cfg).form;
        for (int i = 1; i <= 3; ++i) {
            Multivector dual = complement(Multivector::blade(3, {i}));
            const auto& [bits3, sign] = *dual.terms().begin();
            std::uint32_t chart_bits = bits3 << 1;  // 3-D axes 0..2 are chart axes 1..3
            Polynomial want = sign * cfg.B[static_cast<std::size_t>(i - 1)];
            if (!(F.coefficient(chart_bits) == want)) b_complement = false;
        }
    }

    return ClassicalCorrespondence{faraday, div_b, ampere, gauss, match, b_complement};
}

Multivector kottler_complement(const Multivector& xi, const Rational& vol) {
    if (xi.dimension() != 4)
        throw std::invalid_argument("kottler_complement is defined for dimension 4");
    if (vol == 0) throw std::invalid_argument("volume coefficient must be nonzero");
    auto grade = xi.homogeneous_grade();
    if (!grade || (*grade != 2 && *grade != 3 && !xi.is_zero()))
        throw std::invalid_argument("kottler_complement takes grade 2 or grade 3");
    Multivector out(4);
    for (const auto& [bits, c] : xi.terms()) {
        std::uint32_t other = full_mask(4) & ~bits;
        if (*grade == 2) {
            int sign = merge_sign(other, bits);  // sg(ijkl), dual pair first
            out.add_term(other, vol * (sign < 0 ? Rational(-c) : c));
        } else {
            int sign = merge_sign(bits, other);  // sg(ijkl), 3-form triple first
            out.add_term(other, (sign < 0 ? Rational(-c) : c) / vol);
        }
    }
    return out;
}

PolyForm kottler_complement(const PolyForm& xi, const Rational& vol) {
    if (xi.dimension() != 4)
        throw std::invalid_argument("kottler_complement is defined for dimension 4");
    if (vol == 0) throw std::invalid_argument("volume coefficient must be nonzero");
    auto grade = xi.homogeneous_grade();
    if (!grade || (*grade != 2 && *grade != 3 && !xi.is_zero()))
        throw std::invalid_argument("kottler_complement takes grade 2 or grade 3");
    PolyForm out(xi.metric());
    for (const auto& [bits, p] : xi.terms()) {
        std::uint32_t other = full_mask(4) & ~bits;
        if (*grade == 2) {
            int sign = merge_sign(other, bits);
            out.add_term(other, vol * (sign < 0 ? -p : p));
        } else {
            int sign = merge_sign(bits, other);
            out.add_term(other, Rational(1) / vol * (sign < 0 ? -p : p));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Config file

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

FieldConfig parse_field_config(std::istream& in) {
    FieldConfig cfg;
    std::string section;
    int component = 0;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            component = 0;
            if (section != "E" && section != "B" && section != "D" && section != "H" &&
                section != "rho" && section != "J" && section != "constants")
                fail_at(line_no, "unknown section [" + section + "]");
            continue;
        }
        if (section.empty()) fail_at(line_no, "content before any section header");
        try {
            if (section == "constants") {
                auto eq = line.find('=');
                if (eq == std::string::npos) fail_at(line_no, "expected key = value");
                std::string key = strip(line.substr(0, eq));
                std::string value = strip(line.substr(eq + 1));
                if (key == "c")
                    cfg.c = parse_rational(value);
                else if (key == "mu0")
                    cfg.mu0 = parse_rational(value);
                else if (key == "eps0")
                    cfg.eps0 = parse_rational(value);
                else if (key == "gaussian_4pi") {
                    if (value == "true" || value == "1")
                        cfg.gaussian_4pi = true;
                    else if (value == "false" || value == "0")
                        cfg.gaussian_4pi = false;
                    else
                        fail_at(line_no, "gaussian_4pi wants true/false");
                } else {
                    fail_at(line_no, "unknown constant '" + key + "'");
                }
            } else if (section == "rho") {
                if (component >= 1) fail_at(line_no, "[rho] takes a single line");
                cfg.rho = parse_polynomial(line, kChartDim);
                ++component;
            } else {
                if (component >= 3)
                    fail_at(line_no, "[" + section + "] takes exactly three lines");
                Polynomial p = parse_polynomial(line, kChartDim);
                auto idx = static_cast<std::size_t>(component);
                if (section == "E")
                    cfg.E[idx] = p;
                else if (section == "B")
                    cfg.B[idx] = p;
                else if (section == "D")
                    cfg.D[idx] = p;
                else if (section == "H")
                    cfg.H[idx] = p;
                else
                    cfg.J[idx] = p;
                ++component;
            }
        } catch (const ParseError& e) {
            std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            fail_at(line_no, what);
        }
    }
    return cfg;
}

FieldConfig parse_field_config(const std::string& text) {
    std::istringstream in(text);
    return parse_field_config(in);
}

}  // namespace hodgestar
