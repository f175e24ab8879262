// Copyright 2026 The laurent-duality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldual/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "ldual/errors.hpp"

namespace ldual::gb {

bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree > b.degree) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = a.exp[i] + b.exp[i];
    m.degree = a.degree + b.degree;
    return m;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = b.exp[i] - a.exp[i];
    m.degree = b.degree - a.degree;
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.degree = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        m.exp[i] = std::max(a.exp[i], b.exp[i]);
        m.degree += m.exp[i];
    }
    return m;
}

int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) {
    if (ca != cb) return ca < cb ? 1 : -1;
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
}

Vec axpy(const Vec& p, const Scalar& c, const Monomial& m, const Vec& q) {
    Vec out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size()) {
            out.push_back(p[i++]);
            continue;
        }
        const Monomial qm = product(q[j].mono, m);
        const int cmp = i == p.size() ? -1 : compare(p[i].component, p[i].mono, q[j].component, qm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.push_back(Term{q[j].component, qm, -(c * q[j].coeff)});
            ++j;
        } else {
            Scalar v = p[i].coeff - c * q[j].coeff;
            if (!v.is_zero()) out.push_back(Term{p[i].component, p[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

Vec scale(const Vec& p, const Scalar& c) {
    Vec out;
    if (c.is_zero()) return out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back(Term{t.component, t.mono, c * t.coeff});
    return out;
}

Vec normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a, b) > 0; });
    Vec out;
    for (auto& t : terms) {
        if (!out.empty() && compare(out.back(), t) == 0) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

namespace {

class Reducer {
  public:
    explicit Reducer(const std::vector<Vec>& basis) : basis_(basis) {
        for (std::size_t i = 0; i < basis_.size(); ++i) add(i);
    }

    void add(std::size_t index) {
        const auto comp = basis_[index].front().component;
        by_component_[comp].push_back(index);
    }

    const Vec* find(const Term& t, std::size_t skip = static_cast<std::size_t>(-1)) const {
        auto it = by_component_.find(t.component);
        if (it == by_component_.end()) return nullptr;
        for (auto idx : it->second) {
            if (idx == skip) continue;
            if (divides(basis_[idx].front().mono, t.mono)) return &basis_[idx];
        }
        return nullptr;
    }

    Vec reduce(Vec p, std::size_t skip = static_cast<std::size_t>(-1)) const {
        Vec done;
        while (!p.empty()) {
            std::size_t i = 0;
            const Vec* g = nullptr;
            for (; i < p.size(); ++i) {
                g = find(p[i], skip);
                if (g) break;
                done.push_back(p[i]);
            }
            if (!g) break;
            const Term& t = p[i];
            const Scalar c = t.coeff / g->front().coeff;
            const Monomial m = quotient(t.mono, g->front().mono);
            Vec tail(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
            p = axpy(tail, c, m, *g);
        }
        return done;
    }

  private:
    const std::vector<Vec>& basis_;
    std::map<std::uint32_t, std::vector<std::size_t>> by_component_;
};

Vec make_monic(Vec v) {
    if (v.empty() || v.front().coeff.is_one()) return v;
    return scale(v, v.front().coeff.inverse());
}

Vec s_vector(const Vec& a, const Vec& b) {
    const Monomial l = lcm(a.front().mono, b.front().mono);
    const Monomial ma = quotient(l, a.front().mono);
    const Monomial mb = quotient(l, b.front().mono);
    // both monic: ma * a - mb * b
    const Scalar one = a.front().coeff.field().one();
    Vec lhs = axpy(Vec{}, -one, ma, a);
    return axpy(lhs, one, mb, b);
}

struct Pair {
    std::int32_t degree;
    std::uint32_t component;
    std::size_t i, j;
    friend bool operator<(const Pair& x, const Pair& y) {
        return std::tie(x.degree, x.component, x.j, x.i) < std::tie(y.degree, y.component, y.j, y.i);
    }
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(Field field, std::size_t nvars, std::vector<Vec> generators) {
    if (nvars > kMaxVars) throw InvalidInput("too many variables for the Groebner engine");
    GroebnerBasis out;
    out.field_ = field;
    out.nvars_ = nvars;

    std::vector<Vec> G;
    std::set<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_ids;

    auto insert = [&](Vec h) {
        h = make_monic(std::move(h));
        const std::size_t n = G.size();
        for (std::size_t k = 0; k < n; ++k) {
            if (G[k].front().component != h.front().component) continue;
            const Monomial l = lcm(G[k].front().mono, h.front().mono);
            pending.insert(Pair{l.degree, h.front().component, k, n});
            pending_ids.insert({k, n});
        }
        G.push_back(std::move(h));
    };

    // seed, sorted so that small generators come first
    std::vector<Vec> seeds;
    for (auto& g : generators)
        if (!g.empty()) seeds.push_back(std::move(g));
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Vec& a, const Vec& b) { return compare(a.front(), b.front()) < 0; });
    for (auto& g : seeds) {
        Vec h = Reducer(G).reduce(std::move(g));
        if (!h.empty()) insert(std::move(h));
    }

    auto has_pair = [&](std::size_t a, std::size_t b) {
        return pending_ids.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!pending.empty()) {
        const Pair p = *pending.begin();
        pending.erase(pending.begin());
        pending_ids.erase({p.i, p.j});
        const Monomial l = lcm(G[p.i].front().mono, G[p.j].front().mono);
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == p.i || k == p.j || G[k].front().component != p.component) continue;
            if (divides(G[k].front().mono, l) && !has_pair(p.i, k) && !has_pair(p.j, k)) skip = true;
        }
        if (skip) continue;
        Vec h = Reducer(G).reduce(s_vector(G[p.i], G[p.j]));
        if (!h.empty()) insert(std::move(h));
    }

    // minimalize
    std::vector<std::size_t> order(G.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return compare(G[a].front(), G[b].front()) < 0; });
    std::vector<Vec> minimal;
    for (auto idx : order) {
        const Term& lt = G[idx].front();
        bool redundant = false;
        for (const auto& m : minimal)
            if (m.front().component == lt.component && divides(m.front().mono, lt.mono)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(G[idx]));
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        Reducer r(minimal);
        Vec tail(minimal[i].begin() + 1, minimal[i].end());
        Vec reduced = r.reduce(std::move(tail), i);
        Vec full;
        full.reserve(reduced.size() + 1);
        full.push_back(minimal[i].front());
        for (auto& t : reduced) full.push_back(std::move(t));
        minimal[i] = make_monic(std::move(full));
    }
    out.elements_ = std::move(minimal);
    return out;
}

Vec GroebnerBasis::normal_form(Vec p) const { return Reducer(elements_).reduce(std::move(p)); }

bool GroebnerBasis::satisfies_buchberger_criterion() const {
    Reducer r(elements_);
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (elements_[i].front().component != elements_[j].front().component) continue;
            if (!r.reduce(s_vector(elements_[i], elements_[j])).empty()) return false;
        }
    return true;
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::uint32_t component) const {
    std::vector<Monomial> out;
    for (const auto& g : elements_)
        if (g.front().component == component) out.push_back(g.front().mono);
    return out;
}

}  // namespace ldual::gb
