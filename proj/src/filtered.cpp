#include "fillcert/filtered.hpp"

#include "fillcert/errors.hpp"
#include "fillcert/lattice.hpp"

namespace fillcert {

std::vector<std::string> QuotientBasis::labels() const {
    std::vector<std::string> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.label);
    return out;
}

size_t QuotientBasis::index_of(int generator, const MultiIndex& alpha) const {
    auto it = index_.find({generator, alpha});
    if (it == index_.end()) throw InvalidInput("element is not in the quotient basis");
    return it->second;
}

QuotientBasis make_basis(ModuleTag module, Model model, int degree, std::vector<BasisElement> elements) {
    QuotientBasis b;
    b.module = module;
    b.model = model;
    b.degree = degree;
    b.elements = std::move(elements);
    for (size_t i = 0; i < b.elements.size(); ++i)
        if (!b.index_.emplace(std::make_pair(b.elements[i].generator, b.elements[i].alpha), i).second)
            throw StructureError("duplicate basis element " + b.elements[i].label);
    return b;
}

namespace {

std::string join_label(const std::string& multiplier, const std::string& name) {
    return multiplier.empty() ? name : multiplier + " " + name;
}

BasisElement plaquette_element(Model m, int gen, const MultiIndex& alpha) {
    return {gen, alpha, join_label(difference_monomial_label(alpha), plaquette_name(m, gen))};
}

void require_degree(int k) {
    if (k < 0) throw InvalidInput("filtration degree must be nonnegative");
}

// Divide a homogeneous class by u_i exactly.
AugClass divide_u(const AugClass& c, int i) {
    AugClass out(c.dim(), c.degree() - 1);
    for (const auto& [alpha, v] : c.coeffs()) {
        if (alpha[i] == 0) throw StructureError("graded solve: class not divisible by u_" + std::string(1, variable_name(i)));
        MultiIndex b = alpha;
        b[i] -= 1;
        out.add_term(b, v);
    }
    return out;
}

AugClass times_u(const AugClass& c, int i) {
    AugClass out(c.dim(), c.degree() + 1);
    for (const auto& [alpha, v] : c.coeffs()) {
        MultiIndex b = alpha;
        b[i] += 1;
        out.add_term(b, v);
    }
    return out;
}

AugClass negated(AugClass c) {
    c *= -1;
    return c;
}

AugClass reduce_shifted(const LaurentPoly& p, int degree, int k) {
    try {
        return reduce_mod_filtration(p, degree);
    } catch (const FiltrationError& e) {
        throw FiltrationError("chain is not in I^" + std::to_string(k) + "J", e.surviving_degree() - (degree - k));
    }
}

}  // namespace

QuotientBasis basis_J(int k, Model m) {
    require_degree(k);
    std::vector<BasisElement> el;
    switch (m) {
        case Model::Relative2:
            el.push_back(plaquette_element(m, 1, {k, 0}));
            for (int a = 0; a <= k; ++a) el.push_back(plaquette_element(m, 0, {a, k - a}));
            break;
        case Model::Planar2:
            for (const auto& alpha : multi_indices(2, k)) el.push_back(plaquette_element(m, 0, alpha));
            break;
        case Model::Cubical3:
            for (int gen = 0; gen < 3; ++gen)
                for (const auto& alpha : multi_indices(3, k))
                    if (gen < 2 || alpha[2] == 0) el.push_back(plaquette_element(m, gen, alpha));
            break;
    }
    return make_basis(ModuleTag::J, m, k, std::move(el));
}

QuotientBasis basis_J(int k, int dim) {
    if (dim == 2) return basis_J(k, Model::Relative2);
    if (dim == 3) return basis_J(k, Model::Cubical3);
    throw InvalidInput("dimension must be 2 or 3");
}

QuotientBasis basis_H(int k, const LinkSpec& link) {
    require_degree(k);
    std::vector<BasisElement> el;
    for (size_t i = 0; i < link.components.size(); ++i) {
        const auto& comp = link.components[i];
        const LineQuotient lq = line_quotient(comp.direction);
        check_quotient_free(comp.direction, k);
        for (const auto& beta : multi_indices(lq.quotient_dim(), k))
            el.push_back({static_cast<int>(i), beta, join_label(lq.monomial_label(beta), comp.label)});
    }
    return make_basis(ModuleTag::H, link_model(link), k, std::move(el));
}

QuotientBasis basis_C1(int k, Model m) {
    require_degree(k);
    std::vector<BasisElement> el;
    for (int gen = 0; gen < edge_count(m); ++gen)
        for (const auto& alpha : multi_indices(group_rank(m), k))
            el.push_back({gen, alpha, join_label(difference_monomial_label(alpha), edge_name(m, gen))});
    return make_basis(ModuleTag::C1, m, k, std::move(el));
}

PlaquetteChain emit(const BasisElement& e, Model m) {
    return PlaquetteChain::generator(m, e.generator, LaurentPoly::difference_monomial(e.alpha));
}

IntVector normal_form(const PlaquetteChain& c, int k) {
    require_degree(k);
    const Model m = c.model;
    const QuotientBasis basis = basis_J(k, m);
    IntVector out(basis.size());
    switch (m) {
        case Model::Relative2: {
            // j identifies J with I, shifting the filtration by one.
            const AugClass q = reduce_shifted(j_boundary(c).coords[0], k + 1, k);
            for (const auto& [beta, v] : q.coeffs()) {
                const size_t slot = beta[0] == k + 1 ? basis.index_of(1, {k, 0}) : basis.index_of(0, {beta[0], k - beta[0]});
                out[slot] += v;
            }
            break;
        }
        case Model::Planar2: {
            const AugClass q = reduce_shifted(c.coords[0], k, k);
            for (const auto& [alpha, v] : q.coeffs()) out[basis.index_of(0, alpha)] += v;
            break;
        }
        case Model::Cubical3: {
            // The cubical chain complex has exact associated graded, so
            // c is in I^kJ iff j(c) is in I^{k+1}C_1; solve the graded j.
            const EdgeChain e = j_boundary(c);
            const AugClass qx = reduce_shifted(e.coords[0], k + 1, k);
            const AugClass qy = reduce_shifted(e.coords[1], k + 1, k);
            const AugClass qz = reduce_shifted(e.coords[2], k + 1, k);
            AugClass free_of_z(3, k + 1);
            for (const auto& [beta, v] : qx.coeffs())
                if (beta[2] == 0) free_of_z.add_term(beta, v);
            const AugClass cz = divide_u(free_of_z, 1);
            const AugClass by = divide_u(times_u(cz, 1) + negated(qx), 2);
            const AugClass ax = divide_u(qy + times_u(cz, 0), 2);
            if (!(times_u(by, 0) + negated(times_u(ax, 1)) == qz))
                throw StructureError("graded solve does not reproduce the z-edge coordinate");
            for (const auto& [alpha, v] : ax.coeffs()) out[basis.index_of(0, alpha)] += v;
            for (const auto& [alpha, v] : by.coeffs()) out[basis.index_of(1, alpha)] += v;
            for (const auto& [alpha, v] : cz.coeffs()) out[basis.index_of(2, alpha)] += v;
            break;
        }
    }
    return out;
}

IntVector normal_form(const MeridianChain& h, int k, const LinkSpec& link) {
    require_degree(k);
    return normal_form(h, k, link, basis_H(k, link));
}

IntVector normal_form(const MeridianChain& h, int k, const LinkSpec& link, const QuotientBasis& basis) {
    if (basis.module != ModuleTag::H || basis.degree != k) throw InvalidInput("basis does not match degree");
    IntVector out(basis.size());
    for (const auto& [label, p] : h.coords) {
        if (p.is_zero()) continue;
        const size_t i = link.index_of(label);
        const LineQuotient lq = line_quotient(link.components[i].direction);
        AugClass q;
        try {
            q = reduce_mod_filtration(lq.project(p), k);
        } catch (const FiltrationError& e) {
            throw FiltrationError("meridian chain is not in I^" + std::to_string(k) + "H (component " + label + ")",
                                  e.surviving_degree());
        }
        for (const auto& [beta, v] : q.coeffs()) out[basis.index_of(static_cast<int>(i), beta)] += v;
    }
    return out;
}

IntVector normal_form(const EdgeChain& e, int k) {
    require_degree(k);
    const QuotientBasis basis = basis_C1(k, e.model);
    IntVector out(basis.size());
    for (int gen = 0; gen < edge_count(e.model); ++gen) {
        AugClass q;
        try {
            q = reduce_mod_filtration(e.coords[gen], k);
        } catch (const FiltrationError& err) {
            throw FiltrationError("edge chain is not in I^" + std::to_string(k) + "C_1", err.surviving_degree());
        }
        for (const auto& [alpha, v] : q.coeffs()) out[basis.index_of(gen, alpha)] += v;
    }
    return out;
}

std::vector<std::string> check_boundary_filtration(int k, Model m) {
    std::vector<std::string> bad;
    for (const auto& el : basis_J(k, m).elements) {
        const EdgeChain e = j_boundary(emit(el, m));
        for (const auto& coord : e.coords) {
            const auto deg = filtration_degree(coord, k + 1);
            if (deg && *deg < k + 1) {
                bad.push_back(el.label);
                break;
            }
        }
    }
    return bad;
}

MeridianChain linking(const PlaquetteChain& c, const LinkSpec& link) {
    const Model m = c.model;
    if (m != link_model(link)) throw InvalidInput("chain model does not match link dimension");
    const int d = group_rank(m);
    MeridianChain out;
    out.dim = d;
    for (size_t i = 0; i < link.components.size(); ++i) {
        const Line line = link.line(i);
        LaurentPoly total(d);
        for (int gen = 0; gen < plaquette_count(m); ++gen) {
            if (c.coords[gen].is_zero()) continue;
            const auto [cell, sign] = plaquette_cell(m, gen);
            CubicalChain s(d, static_cast<int>(cell.axes.size()));
            s.add(cell, sign);
            total += c.coords[gen] * intersection_linking(s, line);
        }
        out.coords[link.components[i].label] = std::move(total);
    }
    return out;
}

}  // namespace fillcert
