#include "suq2/io/json.hpp"

#include <stdexcept>

namespace suq2::io {

using qarith::LPoly;
using qarith::QRadical;
using qarith::QScalar;

json to_json(const mpq_class& x) { return x.get_str(); }

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    mpq_class r(j.get<std::string>());
    r.canonicalize();
    return r;
}

json to_json(const LPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({e, to_json(c)});
    return a;
}

LPoly lpoly_from_json(const json& j) {
    std::vector<LPoly::Term> terms;
    for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), rational_from_json(t.at(1)));
    return LPoly::from_terms(std::move(terms));
}

json to_json(const QScalar& x) {
    json o{{"num", to_json(x.num())}};
    if (!x.is_laurent()) o["den"] = to_json(x.den());
    return o;
}

QScalar qscalar_from_json(const json& j) {
    LPoly num = lpoly_from_json(j.at("num"));
    if (!j.contains("den")) return QScalar(num);
    return QScalar(num, lpoly_from_json(j.at("den")));
}

json to_json(const QRadical& x) {
    json a = json::array();
    for (const auto& [rad, c] : x.terms()) a.push_back({{"radicand", to_json(rad)}, {"coef", to_json(c)}});
    return a;
}

QRadical qradical_from_json(const json& j) {
    QRadical r;
    for (const auto& t : j) r += QRadical::sqrt(QScalar(lpoly_from_json(t.at("radicand")))) * qscalar_from_json(t.at("coef"));
    return r;
}

json to_json(const cqalg::Monomial& m) { return {m.dhead ? "d" : "a", m.i, m.j, m.k}; }

cqalg::Monomial monomial_from_json(const json& j) {
    std::string h = j.at(0).get<std::string>();
    if (h != "a" && h != "d") throw std::invalid_argument("monomial head must be a or d");
    int i = j.at(1).get<int>(), jj = j.at(2).get<int>(), k = j.at(3).get<int>();
    if (i < 0 || jj < 0 || k < 0 || (h == "d" && i == 0)) throw std::invalid_argument("monomial not in normal form");
    return cqalg::Monomial::make(h == "d", i, jj, k);
}

namespace {

template <class K, class Enc>
json element_json(const cqalg::Element<K>& x, Enc enc) {
    json a = json::array();
    for (const auto& [m, c] : x.terms()) a.push_back({{"monomial", to_json(m)}, {"coef", enc(c)}});
    return a;
}

template <class K, class Dec>
cqalg::Element<K> element_parse(const json& j, Dec dec) {
    cqalg::Element<K> x;
    for (const auto& t : j) x.add_term(monomial_from_json(t.at("monomial")), dec(t.at("coef")));
    return x;
}

template <class K, class Enc>
json mat_json(const qarith::Mat<K>& m, Enc enc) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(enc(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

template <class K, class Dec>
qarith::Mat<K> mat_parse(const json& j, Dec dec) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    qarith::Mat<K> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < cols; ++c) m(i, c) = dec(j.at(i).at(c));
    }
    return m;
}

template <class K, class Enc>
json fourier_json(const fourier::FourierArray<K>& F, Enc enc) {
    json blocks = json::array();
    for (const auto& [tw, m] : F.blocks()) {
        json entries = json::array();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!qarith::is_zero_value(m(i, j))) entries.push_back({{"row", i}, {"col", j}, {"value", enc(m(i, j))}});
        blocks.push_back({{"spin", cqalg::Spin(tw).str()}, {"twice_l", tw}, {"entries", entries}});
    }
    return {{"blocks", blocks}};
}

template <class K, class Dec>
fourier::FourierArray<K> fourier_parse(const json& j, Dec dec) {
    fourier::FourierArray<K> F;
    for (const auto& b : j.at("blocks")) {
        cqalg::Spin l(b.at("twice_l").get<int>());
        qarith::Mat<K> m(l.dim(), l.dim());
        for (const auto& e : b.at("entries")) m(e.at("row").get<int>(), e.at("col").get<int>()) = dec(e.at("value"));
        F.set(l, std::move(m));
    }
    return F;
}

auto enc_q = [](const QScalar& x) { return to_json(x); };
auto enc_r = [](const QRadical& x) { return to_json(x); };
auto enc_d = [](double x) { return json(x); };
auto dec_q = [](const json& j) { return qscalar_from_json(j); };
auto dec_r = [](const json& j) { return qradical_from_json(j); };
auto dec_d = [](const json& j) { return j.get<double>(); };

}  // namespace

json to_json(const cqalg::AlgebraElement& x) { return element_json(x, enc_q); }
json to_json(const cqalg::RadicalElement& x) { return element_json(x, enc_r); }
cqalg::AlgebraElement element_from_json(const json& j) { return element_parse<QScalar>(j, dec_q); }
cqalg::RadicalElement radical_element_from_json(const json& j) { return element_parse<QRadical>(j, dec_r); }

json to_json(const cqalg::SpinBlock& b) {
    json u = json::array();
    for (const auto& row : b.u) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        u.push_back(r);
    }
    json n = json::array();
    for (const auto& x : b.N) n.push_back(to_json(x));
    return {{"spin", b.l.str()}, {"twice_l", b.l.twice}, {"N", n}, {"u", u}};
}

cqalg::SpinBlock spin_block_from_json(const json& j) {
    cqalg::SpinBlock b;
    b.l = cqalg::Spin(j.at("twice_l").get<int>());
    for (const auto& x : j.at("N")) b.N.push_back(qscalar_from_json(x));
    for (const auto& row : j.at("u")) {
        std::vector<cqalg::AlgebraElement> r;
        for (const auto& e : row) r.push_back(element_from_json(e));
        b.u.push_back(std::move(r));
    }
    if (static_cast<int>(b.N.size()) != b.l.dim() || static_cast<int>(b.u.size()) != b.l.dim())
        throw std::invalid_argument("spin block size does not match spin");
    return b;
}

json to_json(const qarith::QMat& m) { return mat_json(m, enc_q); }
json to_json(const qarith::RMat& m) { return mat_json(m, enc_r); }
qarith::QMat qmat_from_json(const json& j) { return mat_parse<QScalar>(j, dec_q); }
qarith::RMat rmat_from_json(const json& j) { return mat_parse<QRadical>(j, dec_r); }

json to_json(const fourier::ExactFourier& F) { return fourier_json(F, enc_r); }
json to_json(const fourier::NumericFourier& F) { return fourier_json(F, enc_d); }
fourier::ExactFourier exact_fourier_from_json(const json& j) { return fourier_parse<QRadical>(j, dec_r); }
fourier::NumericFourier numeric_fourier_from_json(const json& j) { return fourier_parse<double>(j, dec_d); }

}  // namespace suq2::io
