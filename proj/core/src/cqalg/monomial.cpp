#include "suq2/cqalg/monomial.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace suq2::cqalg {

using qarith::LPoly;

Monomial Monomial::gen(char g) {
    switch (g) {
        case 'a': return make(false, 1, 0, 0);
        case 'b': return make(false, 0, 1, 0);
        case 'c': return make(false, 0, 0, 1);
        case 'd': return make(true, 1, 0, 0);
        default: throw std::invalid_argument(std::string("unknown generator ") + g);
    }
}

std::string Monomial::word() const {
    std::string w(static_cast<size_t>(i), dhead ? 'd' : 'a');
    w.append(static_cast<size_t>(j), 'b');
    w.append(static_cast<size_t>(k), 'c');
    return w;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    auto part = [&](char g, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += g;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part(dhead ? 'd' : 'a', i);
    part('b', j);
    part('c', k);
    return s;
}

uint64_t Monomial::key() const {
    return (static_cast<uint64_t>(dhead) << 63) | (static_cast<uint64_t>(i) << 42) |
           (static_cast<uint64_t>(j) << 21) | static_cast<uint64_t>(k);
}

Monomial Monomial::from_key(uint64_t key) {
    Monomial m;
    m.dhead = (key >> 63) & 1u;
    m.i = static_cast<int>((key >> 42) & 0x1FFFFF);
    m.j = static_cast<int>((key >> 21) & 0x1FFFFF);
    m.k = static_cast<int>(key & 0x1FFFFF);
    return m;
}

namespace {

using Acc = std::map<Monomial, LPoly>;

void acc_add(Acc& acc, const Monomial& m, const LPoly& p) {
    if (p.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) acc.erase(it);
}

Expansion to_expansion(Acc&& acc) {
    Expansion e;
    e.reserve(acc.size());
    for (auto& [m, p] : acc) e.emplace_back(m, std::move(p));
    return e;
}

// x * g for a single generator, following ba = qab, ca = qac, bc = cb,
// db = qbd, dc = qcd, ad - q^{-1}bc = 1, da - qbc = 1.
void rmul_gen(const Monomial& m, char g, const LPoly& coef, Acc& out) {
    const int jk = m.j + m.k;
    switch (g) {
        case 'b':
            acc_add(out, Monomial::make(m.dhead, m.i, m.j + 1, m.k), coef);
            return;
        case 'c':
            acc_add(out, Monomial::make(m.dhead, m.i, m.j, m.k + 1), coef);
            return;
        case 'a': {
            LPoly f = coef.shifted(2 * jk);
            if (!m.dhead) {
                acc_add(out, Monomial::make(false, m.i + 1, m.j, m.k), f);
            } else {
                acc_add(out, Monomial::make(true, m.i - 1, m.j, m.k), f);
                acc_add(out, Monomial::make(true, m.i - 1, m.j + 1, m.k + 1), f.shifted(2));
            }
            return;
        }
        case 'd': {
            LPoly f = coef.shifted(-2 * jk);
            if (m.dhead || m.i == 0) {
                acc_add(out, Monomial::make(true, m.i + 1, m.j, m.k), f);
            } else {
                acc_add(out, Monomial::make(false, m.i - 1, m.j, m.k), f);
                acc_add(out, Monomial::make(false, m.i - 1, m.j + 1, m.k + 1), f.shifted(-2));
            }
            return;
        }
        default: throw std::invalid_argument("rmul_gen: bad generator");
    }
}

Expansion mul_expansions(const Expansion& x, const Expansion& y) {
    Acc acc;
    for (const auto& [mx, px] : x)
        for (const auto& [my, py] : y) {
            LPoly c = px * py;
            for (const auto& [m, p] : monomial_product(mx, my)) acc_add(acc, m, c * p);
        }
    return to_expansion(std::move(acc));
}

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        return std::hash<uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
    }
};

std::shared_mutex product_mutex;
std::unordered_map<std::pair<uint64_t, uint64_t>, Expansion, PairHash> product_cache;

std::shared_mutex unary_mutex;
std::unordered_map<uint64_t, Expansion> star_cache;
std::unordered_map<uint64_t, Expansion> antipode_cache;

using TensorExpansion = std::vector<std::pair<std::pair<Monomial, Monomial>, LPoly>>;
std::shared_mutex coproduct_mutex;
std::unordered_map<uint64_t, TensorExpansion> coproduct_cache;

Monomial drop_last(const Monomial& m, char& last) {
    if (m.k > 0) {
        last = 'c';
        return Monomial::make(m.dhead, m.i, m.j, m.k - 1);
    }
    if (m.j > 0) {
        last = 'b';
        return Monomial::make(m.dhead, m.i, m.j - 1, m.k);
    }
    last = m.dhead ? 'd' : 'a';
    return Monomial::make(m.dhead, m.i - 1, 0, 0);
}

Expansion gen_image(char g, bool star) {
    auto single = [](char h, LPoly c) { return Expansion{{Monomial::gen(h), std::move(c)}}; };
    if (star) {
        switch (g) {
            case 'a': return single('d', LPoly(1));
            case 'b': return single('c', -LPoly::q_pow(-1));
            case 'c': return single('b', -LPoly::q_pow(1));
            default: return single('a', LPoly(1));
        }
    }
    switch (g) {
        case 'a': return single('d', LPoly(1));
        case 'b': return single('b', -LPoly::q_pow(1));
        case 'c': return single('c', -LPoly::q_pow(-1));
        default: return single('a', LPoly(1));
    }
}

const Expansion& anti_map(const Monomial& x, bool star, std::unordered_map<uint64_t, Expansion>& cache) {
    {
        std::shared_lock lock(unary_mutex);
        auto it = cache.find(x.key());
        if (it != cache.end()) return it->second;
    }
    Expansion result;
    if (x.is_one()) {
        result = {{Monomial::one(), LPoly(1)}};
    } else {
        char last;
        Monomial prefix = drop_last(x, last);
        result = mul_expansions(gen_image(last, star), anti_map(prefix, star, cache));
    }
    std::unique_lock lock(unary_mutex);
    return cache.emplace(x.key(), std::move(result)).first->second;
}

TensorExpansion gen_coproduct(char g) {
    auto t = [](char x, char y) {
        return std::make_pair(std::make_pair(Monomial::gen(x), Monomial::gen(y)), LPoly(1));
    };
    switch (g) {
        case 'a': return {t('a', 'a'), t('b', 'c')};
        case 'b': return {t('a', 'b'), t('b', 'd')};
        case 'c': return {t('c', 'a'), t('d', 'c')};
        default: return {t('c', 'b'), t('d', 'd')};
    }
}

}  // namespace

const Expansion& monomial_product(const Monomial& x, const Monomial& y) {
    auto key = std::make_pair(x.key(), y.key());
    {
        std::shared_lock lock(product_mutex);
        auto it = product_cache.find(key);
        if (it != product_cache.end()) return it->second;
    }
    Acc cur;
    cur.emplace(x, LPoly(1));
    for (char g : y.word()) {
        Acc next;
        for (const auto& [m, p] : cur) rmul_gen(m, g, p, next);
        cur = std::move(next);
    }
    Expansion result = to_expansion(std::move(cur));
    std::unique_lock lock(product_mutex);
    return product_cache.emplace(key, std::move(result)).first->second;
}

const Expansion& monomial_star(const Monomial& x) { return anti_map(x, true, star_cache); }

const Expansion& monomial_antipode(const Monomial& x) { return anti_map(x, false, antipode_cache); }

const TensorExpansion& monomial_coproduct(const Monomial& x) {
    {
        std::shared_lock lock(coproduct_mutex);
        auto it = coproduct_cache.find(x.key());
        if (it != coproduct_cache.end()) return it->second;
    }
    TensorExpansion result;
    if (x.is_one()) {
        result = {{{Monomial::one(), Monomial::one()}, LPoly(1)}};
    } else {
        char last;
        Monomial prefix = drop_last(x, last);
        const TensorExpansion& left = monomial_coproduct(prefix);
        std::map<std::pair<Monomial, Monomial>, LPoly> acc;
        for (const auto& [lt, lp] : left)
            for (const auto& [gt, gp] : gen_coproduct(last)) {
                const Expansion& e1 = monomial_product(lt.first, gt.first);
                const Expansion& e2 = monomial_product(lt.second, gt.second);
                LPoly base = lp * gp;
                for (const auto& [m1, p1] : e1)
                    for (const auto& [m2, p2] : e2) {
                        auto key = std::make_pair(m1, m2);
                        LPoly v = base * p1 * p2;
                        auto it = acc.find(key);
                        if (it == acc.end()) {
                            acc.emplace(key, std::move(v));
                        } else {
                            it->second += v;
                            if (it->second.is_zero()) acc.erase(it);
                        }
                    }
            }
        for (auto& [k, v] : acc) result.emplace_back(k, std::move(v));
    }
    std::unique_lock lock(coproduct_mutex);
    return coproduct_cache.emplace(x.key(), std::move(result)).first->second;
}

}  // namespace suq2::cqalg
