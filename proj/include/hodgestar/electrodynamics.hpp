#pragma once

#include <array>
#include <iosfwd>

#include "hodgestar/poly_form.hpp"

namespace hodgestar {

// Field-strength and excitation 2-forms on the chart (x0, x1, x2, x3) with
// x0 timelike (metric diag(+1,-1,-1,-1)) and x0 = c*t, so time derivatives in
// the classical equations appear as d/dx0.
//
// Historical sources write the time differential last; reordering [dx_i dt]
// to the ascending chart (time axis first) costs one sign per time blade.
// This library fixes the translation once, here:
//
//   F = B1 dx2^dx3 - B2 dx1^dx3 + B3 dx1^dx2 - E1 dx0^dx1 - E2 dx0^dx2 - E3 dx0^dx3
//   G = D1 dx2^dx3 - D2 dx1^dx3 + D3 dx1^dx2 + H1 dx0^dx1 + H2 dx0^dx2 + H3 dx0^dx3
//
// The reordering sign is kept in F (E-slot coefficient -E_i) and absorbed in
// the excitation G (H-slot coefficient +H_i). With these choices, exactly:
//
//   dF = 0      <->  { curl E + dB/dx0 = 0, div B = 0 }   component by component
//   dG = k*S    <->  { curl H - dD/dx0 = k*J, div D = k*rho }
//   G  = star F  when (D, H) = (E, B)                      (vacuum, mu0 = 1)
//
// where S = rho dx1^dx2^dx3 - k independent current 3-form (see
// assemble_currents) and k is the units factor below.
//
// Units. Default is the rationalized system: k = +1 and the equations carry
// no 4pi. gaussian_4pi switches the source coupling to the Gaussian shape
// "-4pi S": the residual becomes dG + 4*S with the irrational factor pi
// absorbed into the source fields by convention (a config meant for this mode
// stores pi*rho and pi*J), which keeps every check exact. The sign is part of
// the historical convention this toggle reproduces and is applied uniformly
// to all four formulations, so their verdicts agree in either mode.
struct FieldConfig {
    std::array<Polynomial, 3> E, B, D, H, J;
    Polynomial rho;
    Rational c{1}, mu0{1}, eps0{1};
    bool gaussian_4pi = false;

    FieldConfig();
};

// Sections [E] [B] [D] [H] (three polynomial lines each), [rho] (one line),
// [J] (three lines), [constants] (key = value). Missing sections are zero /
// defaults. Errors carry 1-based line numbers.
FieldConfig parse_field_config(std::istream& in);
FieldConfig parse_field_config(const std::string& text);

// +1 in rationalized units; -4 under gaussian_4pi (the "-4pi" coupling with
// pi absorbed into the stored sources, as documented above).
Rational source_scale(const FieldConfig& cfg);

struct FaradayForm {
    PolyForm form;  // grade 2, Minkowski metric
};

// The excitation in the arrangement that satisfies the source equation
// directly: D on the spatial cyclic blades, H on the time blades.
struct ExcitationForm {
    PolyForm form;  // grade 2, Minkowski metric
};

// Covariant current 1-form j = k*(rho dx0 - J1 dx1 - J2 dx2 - J3 dx3) (its
// raised components are k*(rho, J)) and the dual 3-form S; the constructor
// enforces S = star j exactly.
struct CurrentForms {
    PolyForm j;
    PolyForm S;
};

FaradayForm assemble_faraday(const FieldConfig& cfg);
ExcitationForm assemble_excitation(const FieldConfig& cfg);
// The six-component excitation in the same arrangement as F, with
// (E, B) -> (D, H): the object whose raised divergence gives the source
// equations in component form.
PolyForm minkowski_excitation(const FieldConfig& cfg);
CurrentForms assemble_currents(const FieldConfig& cfg);

struct MaxwellResiduals {
    PolyForm first;       // homogeneous equation residual
    PolyForm second;      // source equation residual
    PolyForm continuity;  // d of the source 3-form; nonzero dooms the source equation
    bool pass() const { return first.is_zero() && second.is_zero(); }
};

// Premetric pair: (dF, dG - S). No metric enters.
MaxwellResiduals check_maxwell_premetric(const FaradayForm& F, const ExcitationForm& G,
                                         const CurrentForms& S);
// Metric pair: (dF, d(star F) - S) with the constitutive excitation star F.
MaxwellResiduals check_maxwell_metric(const FaradayForm& F, const FieldConfig& cfg);

// The component (matrix) form: plain divergence rows of the index-swap dual
// for the homogeneous half, metric-raised divergence of the six-component
// excitation minus the current for the source half.
struct ComponentResiduals {
    std::array<Polynomial, 4> homogeneous;  // sum_nu d F*_{mu nu}/dx_nu
    std::array<Polynomial, 4> source;       // sum_nu d f^{mu nu}/dx_nu - k s^mu
    bool pass() const;
};

ComponentResiduals check_maxwell_components(const FieldConfig& cfg);

// The four classical residuals computed twice: by 3-D vector calculus on the
// component polynomials, and by reading them off dF and dG - S through the
// fixed sign table
//   (dF)_{012} = +Faraday_3   (dG-S)_{012} = -Ampere_3
//   (dF)_{013} = -Faraday_2   (dG-S)_{013} = +Ampere_2
//   (dF)_{023} = +Faraday_1   (dG-S)_{023} = -Ampere_1
//   (dF)_{123} = div B        (dG-S)_{123} = div D - k*rho
struct ClassicalCorrespondence {
    std::array<Polynomial, 3> faraday;  // curl E + dB/dx0
    Polynomial div_b;
    std::array<Polynomial, 3> ampere;  // curl H - dD/dx0 - k*J
    Polynomial gauss;                  // div D - k*rho
    bool forms_match_components;       // the table above holds term by term
    bool b_form_is_complement;         // spatial F = 3-D complement of the B vector
    bool pass() const;
};

ClassicalCorrespondence classical_correspondence(const FieldConfig& cfg);

// Premetric dual against a volume blade with coefficient vol (nonzero).
// Grade 2: out_{ij} = vol * sg(ijkl) * in^{kl} (the forward defining
// relation; coefficients scale linearly in vol). Grade 3: solves the grade-3
// defining relation in_{ijk} = vol * sg(ijkl) * out^l for the vector, so
// coefficients scale by 1/vol. With vol = 1 and Euclidean raising both agree
// with the frame complement.
Multivector kottler_complement(const Multivector& xi, const Rational& vol);
PolyForm kottler_complement(const PolyForm& xi, const Rational& vol);

}  // namespace hodgestar
