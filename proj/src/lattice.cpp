#include "fillcert/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fillcert/errors.hpp"

namespace fillcert {

Integer CubicalChain::coefficient(const Cell& c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? Integer(0) : it->second;
}

void CubicalChain::add(const Cell& c, const Integer& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(c.base.size()) != dim_ || static_cast<int>(c.axes.size()) != degree_)
        throw InvalidInput("cell shape does not match chain");
    auto [it, inserted] = cells_.try_emplace(c, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) cells_.erase(it);
    }
}

CubicalChain& CubicalChain::operator+=(const CubicalChain& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_) throw InvalidInput("chain shape mismatch");
    for (const auto& [c, v] : o.cells_) add(c, v);
    return *this;
}

CubicalChain& CubicalChain::operator-=(const CubicalChain& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_) throw InvalidInput("chain shape mismatch");
    for (const auto& [c, v] : o.cells_) add(c, -v);
    return *this;
}

CubicalChain operator*(const Integer& s, CubicalChain a) {
    if (s == 0) return CubicalChain(a.dim_, a.degree_);
    for (auto& [c, v] : a.cells_) v *= s;
    return a;
}

CubicalChain CubicalChain::translated(const Exponents& shift) const {
    CubicalChain out(dim_, degree_);
    for (const auto& [c, v] : cells_) {
        Cell t = c;
        for (int i = 0; i < dim_; ++i) t.base[i] += shift.at(i);
        out.cells_.emplace(std::move(t), v);
    }
    return out;
}

CubicalChain CubicalChain::boundary() const {
    CubicalChain out(dim_, degree_ - 1);
    if (degree_ == 0) return out;
    for (const auto& [c, v] : cells_) {
        for (size_t r = 0; r < c.axes.size(); ++r) {
            Cell face{c.base, {}};
            for (size_t s = 0; s < c.axes.size(); ++s)
                if (s != r) face.axes.push_back(c.axes[s]);
            const Integer sv = (r % 2 == 0) ? v : Integer(-v);
            out.add(face, -sv);
            face.base[c.axes[r]] += 1;
            out.add(face, sv);
        }
    }
    return out;
}

bool CubicalChain::is_cycle() const {
    if (degree_ == 0) {
        Integer sum = 0;
        for (const auto& [c, v] : cells_) sum += v;
        return sum == 0;
    }
    return boundary().is_zero();
}

std::string CubicalChain::dump() const {
    std::ostringstream os;
    for (const auto& [c, v] : cells_) {
        os << '(';
        for (size_t i = 0; i < c.base.size(); ++i) os << (i ? "," : "") << c.base[i];
        os << ") {";
        for (size_t i = 0; i < c.axes.size(); ++i) os << variable_name(c.axes[i]);
        os << "} " << v.get_str() << '\n';
    }
    return os.str();
}

Cell square(const Exponents& base, int i, int j) {
    if (i == j) throw InvalidInput("degenerate square");
    return Cell{base, {std::min(i, j), std::max(i, j)}};
}

Cell edge(const Exponents& base, int i) { return Cell{base, {i}}; }

CubicalChain fill_cycle(const CubicalChain& c, const std::vector<int>& axis_order) {
    const int d = c.dim();
    if (c.degree() >= d) throw InvalidInput("cannot fill top-dimensional chain");
    if (!c.is_cycle()) throw NotACycle("chain to fill is not a cycle");
    CubicalChain filling(d, c.degree() + 1);
    if (c.is_zero()) return filling;

    std::vector<int> order = axis_order;
    if (order.empty()) {
        order.resize(d);
        std::iota(order.begin(), order.end(), 0);
    }
    {
        std::vector<int> check = order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < d; ++i)
            if (static_cast<int>(check.size()) != d || check[i] != i) throw InvalidInput("axis order must be a permutation");
    }

    Exponents corner = c.cells().begin()->first.base;
    for (const auto& [cell, v] : c.cells())
        for (int i = 0; i < d; ++i) corner[i] = std::min(corner[i], cell.base[i]);

    CubicalChain current = c;
    for (int a : order) {
        // Sweep every cell that does not contain axis a down to the corner
        // hyperplane; afterwards no cell of the remainder contains a.
        std::vector<std::pair<Cell, Integer>> todo;
        for (const auto& [cell, v] : current.cells())
            if (cell.base[a] > corner[a] && !std::binary_search(cell.axes.begin(), cell.axes.end(), a))
                todo.emplace_back(cell, v);
        for (const auto& [cell, v] : todo) {
            std::vector<int> axes = cell.axes;
            axes.insert(std::upper_bound(axes.begin(), axes.end(), a), a);
            const long r = std::count_if(cell.axes.begin(), cell.axes.end(), [a](int x) { return x < a; });
            const Integer sv = (r % 2 == 0) ? v : Integer(-v);
            CubicalChain h(d, c.degree() + 1);
            for (int64_t t = corner[a]; t < cell.base[a]; ++t) {
                Cell s{cell.base, axes};
                s.base[a] = t;
                h.add(s, sv);
            }
            filling += h;
            current -= h.boundary();
        }
    }
    if (!current.is_zero() || !(filling.boundary() == c))
        throw StructureError("cone-off filling failed to bound the cycle");
    return filling;
}

// ---------------------------------------------------------------- lines

namespace {

Integer floor_q(const mpq_class& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integral(const mpq_class& q) { return q.get_den() == 1; }

// Is q in g*Z (g > 0)?
bool in_multiple(const mpq_class& q, const Integer& g) {
    if (!is_integral(q)) return false;
    return q.get_num() % g == 0;
}

Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Does the planar line through p with direction (vj, vk) meet Z^2?
bool planar_line_hits_lattice(const mpq_class& pj, const mpq_class& pk, int64_t vj, int64_t vk) {
    if (vj == 0 && vk == 0) return is_integral(pj) && is_integral(pk);
    if (vj == 0) return is_integral(pj);
    if (vk == 0) return is_integral(pk);
    const mpq_class c = mpq_class(vj) * pk - mpq_class(vk) * pj;
    return in_multiple(c, gcd_int(Integer(static_cast<long>(vj)), Integer(static_cast<long>(vk))));
}

int first_nonzero(const std::vector<int64_t>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

void canonicalize_translate(Exponents& g, const std::vector<int64_t>& v) {
    const int e = first_nonzero(v);
    const int64_t av = v[e] < 0 ? -v[e] : v[e];
    int64_t q = g[e] >= 0 ? g[e] / av : -((-g[e] + av - 1) / av);
    if (v[e] < 0) q = -q;
    for (size_t i = 0; i < g.size(); ++i) g[i] -= q * v[i];
}

}  // namespace

Line make_line(const std::vector<int64_t>& direction, const std::string& label, int slot) {
    Line l{direction, {}, label};
    for (size_t i = 0; i < direction.size(); ++i) l.basepoint.emplace_back(static_cast<long>(i + 1), 2L * slot + 4);
    for (auto& q : l.basepoint) q.canonicalize();
    return l;
}

void validate_line(const Line& l) {
    const size_t d = l.direction.size();
    if (d != 2 && d != 3) throw InvalidInput("line dimension must be 2 or 3");
    if (l.basepoint.size() != d) throw InvalidInput("basepoint dimension mismatch");
    int64_t g = 0;
    for (auto x : l.direction) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1) throw InvalidInput("line direction must be primitive and nonzero: " + l.label);
    // Codimension-two cells along axis a are hit iff the projection to the
    // complementary coordinate plane passes through a lattice point.
    for (size_t j = 0; j < d; ++j)
        for (size_t k = j + 1; k < d; ++k) {
            if (planar_line_hits_lattice(l.basepoint[j], l.basepoint[k], l.direction[j], l.direction[k]))
                throw InvalidInput("line meets the lattice skeleton: " + l.label);
        }
}

bool lines_disjoint(const Line& a, const Line& b) {
    if (a.direction.size() != 3 || b.direction.size() != 3) return true;
    const auto& u = a.direction;
    const auto& v = b.direction;
    const int64_t n[3] = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    std::vector<mpq_class> diff(3);
    for (int i = 0; i < 3; ++i) diff[i] = b.basepoint[i] - a.basepoint[i];
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) {
        // Parallel: some translate coincides iff diff + t u is integral for some t.
        const int e = first_nonzero(u);
        const int64_t av = u[e] < 0 ? -u[e] : u[e];
        for (int64_t r = 0; r < av; ++r) {
            const mpq_class t = (mpq_class(static_cast<long>(r)) - diff[e]) / static_cast<long>(u[e]);
            bool all = true;
            for (int i = 0; i < 3 && all; ++i) all = is_integral(mpq_class(diff[i] + t * static_cast<long>(u[i])));
            if (all) return false;
        }
        return true;
    }
    Integer g = 0;
    for (auto x : n) g = gcd_int(g, Integer(static_cast<long>(x)));
    mpq_class dot = 0;
    for (int i = 0; i < 3; ++i) dot += diff[i] * static_cast<long>(n[i]);
    return !in_multiple(dot, g);
}

LaurentPoly intersection_linking(const CubicalChain& filling, const Line& l) {
    const int d = filling.dim();
    if (static_cast<int>(l.direction.size()) != d) throw InvalidInput("line dimension mismatch");
    if (filling.degree() != d - 1) throw InvalidInput("linking needs a chain of codimension-one cells");
    LaurentPoly out(d);
    const auto& v = l.direction;
    const auto& b = l.basepoint;
    for (const auto& [cell, coeff] : filling.cells()) {
        int k = 0;
        while (k < static_cast<int>(cell.axes.size()) && cell.axes[k] == k) ++k;
        const int64_t vk = v[k];
        if (vk == 0) continue;
        const int sign = ((vk > 0) ? 1 : -1) * (((d - 1 - k) % 2 == 0) ? 1 : -1);
        const int64_t count = vk < 0 ? -vk : vk;
        for (int64_t m = 0; m < count; ++m) {
            const mpq_class t = (mpq_class(static_cast<long>(cell.base[k])) - b[k] - static_cast<long>(m)) /
                                static_cast<long>(vk);
            Exponents g(d);
            g[k] = m;
            for (int i = 0; i < d; ++i) {
                if (i == k) continue;
                const mpq_class y = b[i] + t * static_cast<long>(v[i]);
                const mpq_class rel = static_cast<long>(cell.base[i]) - y;
                if (is_integral(rel)) throw TransversalityError("line " + l.label + " meets a cell boundary");
                g[i] = floor_q(rel).get_si() + 1;
            }
            canonicalize_translate(g, v);
            out.add_term(g, sign * coeff);
        }
    }
    return out;
}

LaurentPoly geometric_linking(const CubicalChain& cycle, const Line& l, const std::vector<int>& axis_order) {
    return intersection_linking(fill_cycle(cycle, axis_order), l);
}

// ---------------------------------------------------------------- conversions

CubicalChain to_grid_cycle(const EdgeChain& e) {
    const int d = group_rank(e.model);
    if (e.model == Model::Relative2) {
        CubicalChain c(d, 0);
        for (const auto& [x, v] : e.coords[0].terms()) c.add(Cell{x, {}}, v);
        return c;
    }
    CubicalChain c(d, 1);
    for (int i = 0; i < d; ++i)
        for (const auto& [x, v] : e.coords[i].terms()) c.add(edge(x, i), v);
    return c;
}

EdgeChain from_grid_cycle(const CubicalChain& c, Model m) {
    const int d = group_rank(m);
    const int degree = m == Model::Relative2 ? 0 : 1;
    if (c.dim() != d || c.degree() != degree) throw InvalidInput("chain does not match model " + model_name(m));
    EdgeChain e = EdgeChain::zero(m);
    for (const auto& [cell, v] : c.cells()) {
        const int slot = degree == 0 ? 0 : cell.axes[0];
        e.coords[slot].add_term(cell.base, v);
    }
    return e;
}

std::pair<Cell, int> plaquette_cell(Model m, int generator) {
    switch (m) {
        case Model::Relative2:
            return {Cell{{0, 0}, {1 - generator}}, -1};
        case Model::Planar2:
            return {Cell{{0, 0}, {0, 1}}, 1};
        case Model::Cubical3: {
            std::vector<int> axes;
            for (int i = 0; i < 3; ++i)
                if (i != generator) axes.push_back(i);
            return {Cell{{0, 0, 0}, axes}, generator % 2 == 0 ? 1 : -1};
        }
    }
    throw InvalidInput("unknown model");
}

CubicalChain word_to_cycle(const FreeWord& w) {
    const int d = w.rank();
    if (d != 2 && d != 3) throw InvalidInput("words must have rank 2 or 3");
    CubicalChain c(d, 1);
    Exponents pos(d, 0);
    for (const auto& l : w.letters()) {
        if (l.exponent > 0) {
            c.add(edge(pos, l.generator), 1);
            pos[l.generator] += 1;
        } else {
            pos[l.generator] -= 1;
            c.add(edge(pos, l.generator), -1);
        }
    }
    for (auto p : pos)
        if (p != 0) throw InvalidInput("word is not in the commutator subgroup: " + w.to_string());
    return c;
}

PlaquetteChain cycle_to_plaquettes(const CubicalChain& c, Model m) {
    const EdgeChain edges = from_grid_cycle(c, m);
    const CubicalChain s = fill_cycle(c);
    PlaquetteChain p = PlaquetteChain::zero(m);
    for (const auto& [cell, v] : s.cells()) {
        bool found = false;
        for (int i = 0; i < plaquette_count(m) && !found; ++i) {
            const auto [pc, sign] = plaquette_cell(m, i);
            if (pc.axes == cell.axes) {
                p.coords[i].add_term(cell.base, sign * v);
                found = true;
            }
        }
        if (!found) throw StructureError("filling cell does not match a plaquette class");
    }
    if (!(j_boundary(p) == edges)) throw StructureError("plaquette reading does not reproduce the cycle");
    return canonical(p);
}

}  // namespace fillcert
