#include "eulersum/goncharov.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eulersum {
namespace hopf {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto& g : m) d += g.degree();
    return d;
}

Elem Elem::unit(const Rat& c) {
    Elem e;
    e.add_term(Monomial{}, c);
    return e;
}

void Elem::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Elem& Elem::operator+=(const Elem& o) {
    for (auto& [m, c] : o.t) add_term(m, c);
    return *this;
}

Elem operator*(const Elem& a, const Elem& b) {
    Elem r;
    for (auto& [ma, ca] : a.t)
        for (auto& [mb, cb] : b.t) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            r.add_term(m, ca * cb);
        }
    return r;
}

Elem operator*(const Rat& c, Elem a) {
    if (c == 0) return Elem::zero();
    for (auto& [m, v] : a.t) v *= c;
    return a;
}

Rat Elem::counit() const {
    auto it = t.find(Monomial{});
    return it == t.end() ? Rat(0) : it->second;
}

Elem generator(const std::vector<int>& labels) {
    if (labels.size() < 2) throw std::invalid_argument("generator needs two endpoints");
    const int deg = static_cast<int>(labels.size()) - 2;
    if (deg == 0) return Elem::unit();                      // I(a;b) = 1
    if (labels.front() == labels.back()) return Elem::zero();  // I(a;...;a) = 0
    Gen g{labels};
    Elem e;
    e.add_term(Monomial{g}, 1);
    return e;
}

Elem generator(int s0, const std::vector<int>& interior, int s1) {
    std::vector<int> labels;
    labels.push_back(s0);
    labels.insert(labels.end(), interior.begin(), interior.end());
    labels.push_back(s1);
    return generator(labels);
}

void Tensor2::add_term(const Monomial& l, const Monomial& r, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(std::make_pair(l, r), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (auto& [k, c] : o.t) add_term(k.first, k.second, c);
    return *this;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
    Tensor2 r;
    for (auto& [ka, ca] : a.t)
        for (auto& [kb, cb] : b.t) {
            Monomial l = ka.first;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            std::sort(l.begin(), l.end());
            Monomial rr = ka.second;
            rr.insert(rr.end(), kb.second.begin(), kb.second.end());
            std::sort(rr.begin(), rr.end());
            r.add_term(l, rr, ca * cb);
        }
    return r;
}

void Tensor3::add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Rat& v) {
    if (v == 0) return;
    auto key = std::make_tuple(a, b, c);
    auto [it, fresh] = t.emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) t.erase(it);
    }
}

namespace {

// Coproduct of one generator: sum over interior subsets {i_1 < ... < i_k};
// the subsequence integral goes left, the product over gaps goes right.
Tensor2 coproduct_gen(const Gen& g) {
    const int m = g.degree();
    Tensor2 out;
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
        std::vector<int> picked;  // positions 1..m
        for (int i = 0; i < m; ++i)
            if (bits & (1u << i)) picked.push_back(i + 1);
        // left: I(s_0; s_{i_1},...,s_{i_k}; s_{m+1})
        std::vector<int> lv;
        lv.push_back(g.s.front());
        for (int p : picked) lv.push_back(g.s[p]);
        lv.push_back(g.s.back());
        Elem left = generator(lv);
        // right: product over consecutive gap integrals
        Elem right = Elem::unit();
        std::vector<int> cuts;
        cuts.push_back(0);
        for (int p : picked) cuts.push_back(p);
        cuts.push_back(m + 1);
        for (size_t q = 0; q + 1 < cuts.size(); ++q) {
            std::vector<int> seg(g.s.begin() + cuts[q], g.s.begin() + cuts[q + 1] + 1);
            right = right * generator(seg);
            if (right.is_zero()) break;
        }
        for (auto& [lm, lc] : left.t)
            for (auto& [rm, rc] : right.t) out.add_term(lm, rm, lc * rc);
    }
    return out;
}

}  // namespace

Tensor2 coproduct(const Elem& x) {
    Tensor2 out;
    for (auto& [mono, c] : x.t) {
        Tensor2 acc;
        acc.add_term(Monomial{}, Monomial{}, c);
        for (auto& g : mono) acc = acc * coproduct_gen(g);
        out += acc;
    }
    return out;
}

void DrResult::add_term(const Gen& g, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(std::make_pair(g, m), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

DrResult DrResult::times_right(const Elem& y) const {
    DrResult r;
    for (auto& [k, c] : t)
        for (auto& [m, cy] : y.t) {
            Monomial rm = k.second;
            rm.insert(rm.end(), m.begin(), m.end());
            std::sort(rm.begin(), rm.end());
            r.add_term(k.first, rm, c * cy);
        }
    return r;
}

DrResult& DrResult::operator+=(const DrResult& o) {
    for (auto& [k, c] : o.t) add_term(k.first, k.second, c);
    return *this;
}

DrResult infinitesimal(const Elem& x, int r) {
    if (r < 1) throw std::invalid_argument("infinitesimal coaction needs r >= 1");
    DrResult out;
    for (auto& [lr, c] : coproduct(x).t) {
        const Monomial& left = lr.first;
        if (monomial_degree(left) != r) continue;
        // Linearize: a product of two or more positive-degree generators
        // dies in the quotient.
        if (left.size() != 1) continue;
        out.add_term(left.front(), lr.second, c);
    }
    return out;
}

Tensor3 coassoc_left(const Elem& x) {
    Tensor3 out;
    for (auto& [lr, c] : coproduct(x).t) {
        Elem left;
        left.add_term(lr.first, 1);
        for (auto& [ab, c2] : coproduct(left).t)
            out.add_term(ab.first, ab.second, lr.second, c * c2);
    }
    return out;
}

Tensor3 coassoc_right(const Elem& x) {
    Tensor3 out;
    for (auto& [lr, c] : coproduct(x).t) {
        Elem right;
        right.add_term(lr.second, 1);
        for (auto& [bc, c2] : coproduct(right).t)
            out.add_term(lr.first, bc.first, bc.second, c * c2);
    }
    return out;
}

Elem shuffle_relation(int a, const std::vector<int>& left, const std::vector<int>& right,
                      int b) {
    Elem lhs = generator(a, left, b) * generator(a, right, b);
    // sum over interleavings preserving the internal orders
    const size_t n = left.size(), m = right.size();
    std::vector<int> cur;
    Elem rhs;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == n && j == m) {
            rhs += generator(a, cur, b);
            return;
        }
        if (i < n) {
            cur.push_back(left[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < m) {
            cur.push_back(right[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return lhs + Rat(-1) * rhs;
}

Elem path_composition_relation(int a, int b, int c, const std::vector<int>& interior) {
    Elem rhs;
    const size_t m = interior.size();
    for (size_t i = 0; i <= m; ++i) {
        std::vector<int> head(interior.begin(), interior.begin() + i);
        std::vector<int> tail(interior.begin() + i, interior.end());
        rhs += generator(a, head, b) * generator(b, tail, c);
    }
    return generator(a, interior, c) + Rat(-1) * rhs;
}

namespace {

// All nonzero single generators with the given interior length.
std::vector<Gen> gens_of_degree(int deg, const std::vector<int>& labels) {
    std::vector<Gen> out;
    std::vector<std::vector<int>> interiors{{}};
    for (int i = 0; i < deg; ++i) {
        std::vector<std::vector<int>> next;
        for (auto& base : interiors)
            for (int l : labels) {
                auto e = base;
                e.push_back(l);
                next.push_back(e);
            }
        interiors = std::move(next);
    }
    for (auto& interior : interiors)
        for (int a : labels)
            for (int bb : labels) {
                if (a == bb) continue;
                std::vector<int> s;
                s.push_back(a);
                s.insert(s.end(), interior.begin(), interior.end());
                s.push_back(bb);
                out.push_back(Gen{s});
            }
    return out;
}

// Commutative monomials of the given total degree in the generators.
std::vector<Monomial> monomials_of_degree(int deg, const std::vector<int>& labels) {
    std::vector<Monomial> out;
    if (deg == 0) {
        out.push_back(Monomial{});
        return out;
    }
    for (int first = 1; first <= deg; ++first)
        for (auto& g : gens_of_degree(first, labels))
            for (auto& rest : monomials_of_degree(deg - first, labels)) {
                // avoid duplicates: generators in weakly increasing order
                if (!rest.empty() && g > rest.front()) continue;
                Monomial m;
                m.push_back(g);
                m.insert(m.end(), rest.begin(), rest.end());
                out.push_back(std::move(m));
            }
    return out;
}

}  // namespace

bool in_structure_ideal(const Elem& x, const std::vector<int>& labels) {
    if (x.is_zero()) return true;
    int degree = -1;
    for (auto& [m, c] : x.t) {
        int md = monomial_degree(m);
        if (degree < 0) degree = md;
        if (md != degree) throw std::invalid_argument("ideal membership needs a homogeneous input");
    }
    // Columns: relation elements of degree j times monomials of degree
    // (degree - j), expanded over the monomial basis.
    std::vector<Elem> columns;
    auto add_scaled = [&](const Elem& rel) {
        if (rel.is_zero()) return;
        int rd = monomial_degree(rel.t.begin()->first);
        if (rd > degree) return;
        for (auto& m : monomials_of_degree(degree - rd, labels)) {
            Elem mult;
            mult.add_term(m, 1);
            columns.push_back(rel * mult);
        }
    };
    auto sequences = [&](int len) {
        std::vector<std::vector<int>> out{{}};
        for (int i = 0; i < len; ++i) {
            std::vector<std::vector<int>> next;
            for (auto& b : out)
                for (int l : labels) {
                    auto e = b;
                    e.push_back(l);
                    next.push_back(e);
                }
            out = std::move(next);
        }
        return out;
    };
    for (int dl = 1; dl + 1 <= degree; ++dl)
        for (int dr = 1; dl + dr <= degree; ++dr)
            for (int a : labels)
                for (int b : labels)
                    for (auto& lv : sequences(dl))
                        for (auto& rv : sequences(dr)) add_scaled(shuffle_relation(a, lv, rv, b));
    for (int dm = 1; dm <= degree; ++dm)
        for (int a : labels)
            for (int b : labels)
                for (int c : labels)
                    for (auto& mv : sequences(dm)) add_scaled(path_composition_relation(a, b, c, mv));
    // Gaussian elimination over the monomial basis: reduce x by the columns.
    std::map<Monomial, size_t> row_of;
    auto row_index = [&](const Monomial& m) {
        auto [it, fresh] = row_of.emplace(m, row_of.size());
        return it->second;
    };
    std::vector<std::map<size_t, Rat>> basis;  // reduced columns, keyed by pivot row
    auto reduce = [&](std::map<size_t, Rat> vec) {
        for (auto& col : basis) {
            if (col.empty() || vec.empty()) break;
            auto pivot = col.begin()->first;
            auto it = vec.find(pivot);
            if (it == vec.end()) continue;
            Rat factor = it->second / col.begin()->second;
            for (auto& [r, v] : col) {
                auto [jt, fresh] = vec.emplace(r, 0);
                jt->second -= factor * v;
                if (jt->second == 0) vec.erase(jt);
            }
        }
        return vec;
    };
    auto to_vec = [&](const Elem& e) {
        std::map<size_t, Rat> v;
        for (auto& [m, c] : e.t) v[row_index(m)] = c;
        return v;
    };
    for (auto& col : columns) {
        auto v = reduce(to_vec(col));
        if (!v.empty()) {
            basis.push_back(std::move(v));
            // keep basis sorted by pivot for a deterministic reduction
            std::sort(basis.begin(), basis.end(),
                      [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
        }
    }
    return reduce(to_vec(x)).empty();
}

}  // namespace hopf
}  // namespace eulersum
