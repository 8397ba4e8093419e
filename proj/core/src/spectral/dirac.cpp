#include "suq2/spectral/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace suq2::spectral {

using cqalg::AlgebraElement;
using cqalg::RadicalElement;
using cqalg::quantum_dim;
using cqalg::q_weight;

QScalar DiracSpec::abs_lambda(Spin l) const {
    switch (family) {
        case DiracFamily::Classical: return QScalar(l.dim());
        case DiracFamily::QDeformed: return quantum_dim(l);
        case DiracFamily::Table: {
            auto it = table.find(l.twice);
            if (it == table.end()) throw std::out_of_range("Dirac table has no entry for spin " + l.str());
            QScalar v = it->second;
            if (v.is_zero()) throw std::invalid_argument("Dirac eigenvalue must be nonzero");
            // nonconstant entries are taken to be positive on q > 0
            return v.is_constant() && sgn(v.num().lead()) < 0 ? -v : v;
        }
    }
    return QScalar();
}

QScalar DiracSpec::lambda(Spin l) const {
    if (family == DiracFamily::Table) return table.at(l.twice);
    auto it = signs.find(l.twice);
    int s = it == signs.end() ? 1 : it->second;
    return s < 0 ? -abs_lambda(l) : abs_lambda(l);
}

std::string DiracSpec::family_name() const {
    switch (family) {
        case DiracFamily::Classical: return "classical";
        case DiracFamily::QDeformed: return "q";
        case DiracFamily::Table: return "table";
    }
    return "?";
}

DiracFamily parse_dirac_family(const std::string& s) {
    if (s == "classical") return DiracFamily::Classical;
    if (s == "q" || s == "qdeformed") return DiracFamily::QDeformed;
    throw std::invalid_argument("unknown Dirac family: " + s);
}

namespace {

// growth of a positive sequence in N = 2l+1: exp(rate * N) * N^power
struct Growth {
    double rate;
    double power;
};

}  // namespace

SummabilityReport summability_classify(const DiracSpec& spec, const QPoint& q, Multiplicity mult,
                                       int evidence_twice_max) {
    if (spec.family == DiracFamily::Table) throw std::invalid_argument("summability needs a closed-form family");
    const bool classical_q = q.is_classical();
    const double lb = std::log(q.b_q());
    Growth n{0, 1};
    Growth d = classical_q ? Growth{0, 1} : Growth{lb, 0};
    Growth lam = (spec.family == DiracFamily::Classical || classical_q) ? Growth{0, 1} : Growth{lb, 0};
    Growth w = mult == Multiplicity::Plain ? Growth{n.rate * 2, n.power * 2} : Growth{n.rate + d.rate, n.power + d.power};

    SummabilityReport rep;
    rep.multiplicity = mult;
    // summand ~ exp((w.rate - beta lam.rate) N) N^{w.power - beta lam.power}
    if (lam.rate > 0) {
        rep.spectral_dimension = w.rate / lam.rate;
        rep.rule = "ratio test: geometric rates";
    } else if (w.rate > 0) {
        rep.rule = "ratio test: multiplicity grows geometrically, eigenvalues polynomially";
    } else {
        rep.spectral_dimension = (w.power + 1) / lam.power;
        rep.rule = "p-series exponent comparison";
    }
    rep.evidence_beta = rep.spectral_dimension ? *rep.spectral_dimension + 1.0 : 4.0;
    double acc = 0;
    for (int tw = 0; tw <= evidence_twice_max; ++tw) {
        Spin l(tw);
        double nl = l.dim();
        double wl = mult == Multiplicity::Plain ? nl * nl : qarith::evaluate(quantum_dim(l), q) * nl;
        acc += wl / std::pow(spec.abs_lambda(l, q), rep.evidence_beta);
        rep.evidence.push_back({tw, acc});
    }
    return rep;
}

namespace {

QRadical abs_lambda_power(const DiracSpec& spec, Spin l, const mpq_class& alpha) {
    mpq_class two_a = alpha * 2;
    if (two_a.get_den() != 1) throw std::invalid_argument("exact |D|^alpha needs alpha in (1/2)Z");
    long e = two_a.get_num().get_si();
    QScalar lam = spec.abs_lambda(l);
    if (e % 2 == 0) return QRadical(lam.pow(static_cast<int>(e / 2)));
    return QRadical::sqrt(lam.pow(static_cast<int>(e)));
}

}  // namespace

ExactFourier abs_dirac_power(const ExactFourier& F, const mpq_class& alpha, const DiracSpec& spec) {
    ExactFourier out;
    for (const auto& [tw, M] : F.blocks()) {
        QRadical s = abs_lambda_power(spec, Spin(tw), alpha);
        out.set(Spin(tw), M.map([&](const QRadical& x) { return x.is_zero() ? x : x * s; }));
    }
    return out;
}

NumericFourier abs_dirac_power(const NumericFourier& F, double alpha, const DiracSpec& spec, const QPoint& q) {
    NumericFourier out;
    for (const auto& [tw, M] : F.blocks()) out.set(Spin(tw), M.scaled(std::pow(spec.abs_lambda(Spin(tw), q), alpha)));
    return out;
}

RadicalElement abs_dirac_apply(const RadicalElement& f, const DiracSpec& spec) {
    return fourier::inverse_fourier(abs_dirac_power(fourier::fourier_transform(f), 1, spec));
}

RadicalElement commutator_apply(const RadicalElement& a, const RadicalElement& b, const DiracSpec& spec) {
    return abs_dirac_apply(a * b, spec) - a * abs_dirac_apply(b, spec);
}

namespace {

AlgebraElement abs_dirac_rational(const AlgebraElement& f, const DiracSpec& spec) {
    fourier::UCoordinates c = fourier::u_coordinates(f);
    for (auto& [tw, M] : c) M = M.scaled(spec.abs_lambda(Spin(tw)));
    return fourier::from_u_coordinates(c);
}

}  // namespace

QScalar commutator_norm_sq_direct(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec) {
    // t^k_ij t^s_pr = nu-factors * u^k_ij u^s_pr, and the factors square to N ratios
    const AlgebraElement& a = cqalg::u_coeff(k, i, j);
    const AlgebraElement& b = cqalg::u_coeff(s, p, r);
    AlgebraElement g = abs_dirac_rational(a * b, spec) - a * abs_dirac_rational(b, spec);
    QScalar scale = cqalg::norm_square(k, i) * cqalg::norm_square(s, p) /
                    (cqalg::norm_square(k, j) * cqalg::norm_square(s, r));
    return cqalg::haar(g * cqalg::star(g)) * scale;
}

QScalar commutator_norm_sq_expansion(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec) {
    QScalar ls = spec.abs_lambda(s), out;
    for (const auto& [key, c] : cqalg::clebsch_row(k, s, i, j, p, r)) {
        auto [tm, u, t] = key;
        Spin m(tm);
        QScalar diff = spec.abs_lambda(m) - ls;
        if (diff.is_zero()) continue;
        out += diff * diff * c.squared() * q_weight(m, t) / quantum_dim(m);
    }
    return out;
}

QScalar boundedness_lhs_sq(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec) {
    QScalar diff = spec.abs_lambda(k) - spec.abs_lambda(s);
    if (diff.is_zero()) return QScalar();
    QScalar sum;
    for (const auto& [key, c] : cqalg::clebsch_row(k, s, i, j, p, r)) {
        auto [tm, u, t] = key;
        if (u != t) continue;
        Spin m(tm);
        sum += c.squared() * q_weight(m, t) / quantum_dim(m);
    }
    return diff * diff * sum;
}

namespace {

double rhs_norm(Spin s, int r, const QPoint& q) {
    return std::sqrt(qarith::evaluate(q_weight(s, r) / quantum_dim(s), q));
}

}  // namespace

double boundedness_ratio(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec, const QPoint& q) {
    double lhs = std::sqrt(std::max(0.0, qarith::evaluate(boundedness_lhs_sq(k, s, i, j, p, r, spec), q)));
    return lhs / rhs_norm(s, r, q);
}

double commutator_direct_ratio(Spin k, Spin s, int i, int j, int p, int r, const DiracSpec& spec, const QPoint& q) {
    double lhs = std::sqrt(std::max(0.0, qarith::evaluate(commutator_norm_sq_direct(k, s, i, j, p, r, spec), q)));
    return lhs / rhs_norm(s, r, q);
}

}  // namespace suq2::spectral
