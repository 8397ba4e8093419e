#include "suq2/cqalg/haar.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace suq2::cqalg {

namespace {

struct HaarTable {
    std::mutex mu;
    int degree = -1;
    std::map<Monomial, QScalar> values;
};

HaarTable& table() {
    static HaarTable t;
    return t;
}

std::vector<Monomial> grade_zero_monomials(int n) {
    std::vector<Monomial> out;
    if (n % 2) return out;
    int h = n / 2;
    for (int i = 0; i <= h; ++i) out.push_back(Monomial::make(false, i, h, h - i));
    for (int i = 1; i <= h; ++i) out.push_back(Monomial::make(true, i, h - i, h));
    return out;
}

using Row = std::map<int, QScalar>;

struct Echelon {
    std::map<int, std::pair<Row, QScalar>> pivots;

    void reduce(Row& row, QScalar& rhs) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = row.begin(); it != row.end(); ++it) {
                auto pv = pivots.find(it->first);
                if (pv == pivots.end()) continue;
                QScalar f = it->second;
                for (const auto& [col, v] : pv->second.first) {
                    QScalar nv = (row.count(col) ? row[col] : QScalar()) - f * v;
                    if (nv.is_zero())
                        row.erase(col);
                    else
                        row[col] = nv;
                }
                rhs -= f * pv->second.second;
                changed = true;
                break;
            }
        }
    }

    void insert(Row row, QScalar rhs) {
        reduce(row, rhs);
        if (row.empty()) {
            if (!rhs.is_zero()) throw std::logic_error("Haar invariance system is inconsistent");
            return;
        }
        int col = row.begin()->first;
        QScalar inv = row.begin()->second.inverse();
        for (auto& [c, v] : row) v *= inv;
        rhs *= inv;
        for (auto& [pc, pr] : pivots) {
            auto it = pr.first.find(col);
            if (it == pr.first.end()) continue;
            QScalar f = it->second;
            for (const auto& [c, v] : row) {
                QScalar nv = (pr.first.count(c) ? pr.first[c] : QScalar()) - f * v;
                if (nv.is_zero())
                    pr.first.erase(c);
                else
                    pr.first[c] = nv;
            }
            pr.second -= f * rhs;
        }
        pivots.emplace(col, std::make_pair(std::move(row), std::move(rhs)));
    }
};

void solve_degree(HaarTable& t, int n) {
    std::vector<Monomial> unknowns = grade_zero_monomials(n);
    if (unknowns.empty()) return;
    if (n == 0) {
        t.values[Monomial::one()] = QScalar(1);
        return;
    }
    std::map<Monomial, int> index;
    for (size_t i = 0; i < unknowns.size(); ++i) index[unknowns[i]] = static_cast<int>(i);
    Echelon ech;
    for (const Monomial& x : unknowns) {
        std::map<Monomial, std::pair<Row, QScalar>> eqs;
        for (const auto& [key, p] : monomial_coproduct(x)) {
            const Monomial& l = key.first;
            if (l.grade() != 0) continue;
            auto& eq = eqs[key.second];
            auto it = index.find(l);
            if (it != index.end()) {
                QScalar& slot = eq.first[it->second];
                slot += QScalar(p);
                if (slot.is_zero()) eq.first.erase(it->second);
            } else {
                auto kv = t.values.find(l);
                if (kv == t.values.end()) throw std::logic_error("Haar solve: missing lower-degree value");
                eq.second -= kv->second * QScalar(p);
            }
        }
        auto& unit = eqs[Monomial::one()];
        QScalar& self = unit.first[index[x]];
        self -= QScalar(1);
        if (self.is_zero()) unit.first.erase(index[x]);
        for (auto& [r, eq] : eqs) {
            if (eq.first.empty() && eq.second.is_zero()) continue;
            ech.insert(eq.first, eq.second);
            if (ech.pivots.size() == unknowns.size()) break;
        }
        if (ech.pivots.size() == unknowns.size()) break;
    }
    if (ech.pivots.size() != unknowns.size()) throw std::logic_error("Haar solve: system is underdetermined");
    for (const auto& [col, pr] : ech.pivots) {
        if (pr.first.size() != 1) throw std::logic_error("Haar solve: reduction incomplete");
        t.values[unknowns[static_cast<size_t>(col)]] = pr.second;
    }
}

}  // namespace

void haar_prepare(int max_degree) {
    HaarTable& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    for (int n = t.degree + 1; n <= max_degree; ++n) {
        solve_degree(t, n);
        t.degree = n;
    }
}

int haar_solved_degree() {
    HaarTable& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.degree;
}

QScalar haar_monomial(const Monomial& m) {
    if (m.grade() != 0) return QScalar();
    HaarTable& t = table();
    {
        std::lock_guard<std::mutex> lock(t.mu);
        if (m.degree() <= t.degree) {
            auto it = t.values.find(m);
            return it == t.values.end() ? QScalar() : it->second;
        }
    }
    haar_prepare(m.degree());
    std::lock_guard<std::mutex> lock(t.mu);
    return t.values.at(m);
}

}  // namespace suq2::cqalg
