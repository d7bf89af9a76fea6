#include "fillcert/model.hpp"

#include "fillcert/errors.hpp"

namespace fillcert {

int group_rank(Model m) { return m == Model::Cubical3 ? 3 : 2; }

int plaquette_count(Model m) {
    switch (m) {
        case Model::Relative2: return 2;
        case Model::Planar2: return 1;
        case Model::Cubical3: return 3;
    }
    return 0;
}

int edge_count(Model m) {
    switch (m) {
        case Model::Relative2: return 1;
        case Model::Planar2: return 2;
        case Model::Cubical3: return 3;
    }
    return 0;
}

std::string plaquette_name(Model m, int generator) {
    if (m == Model::Planar2) return "P";
    return std::string("P_") + variable_name(generator);
}

std::string edge_name(Model m, int generator) {
    if (m == Model::Relative2) return "Z";
    return std::string("E_") + variable_name(generator);
}

std::string model_name(Model m) {
    switch (m) {
        case Model::Relative2: return "relative-2d";
        case Model::Planar2: return "planar-2d";
        case Model::Cubical3: return "cubical-3d";
    }
    return "?";
}

namespace {

void require_model(Model a, Model b) {
    if (a != b) throw InvalidInput("model mismatch: " + model_name(a) + " vs " + model_name(b));
}

LaurentPoly om(Model m, int i) { return LaurentPoly::one_minus(group_rank(m), i); }

std::string chain_string(const std::vector<LaurentPoly>& coords, auto&& name) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coords[i].to_string() + ")*" + name(static_cast<int>(i));
    }
    return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------- PlaquetteChain

PlaquetteChain PlaquetteChain::zero(Model m) {
    return {m, std::vector<LaurentPoly>(plaquette_count(m), LaurentPoly(group_rank(m)))};
}

PlaquetteChain PlaquetteChain::generator(Model m, int generator, const LaurentPoly& multiplier) {
    PlaquetteChain c = zero(m);
    c.coords.at(generator) = multiplier;
    return c;
}

PlaquetteChain& PlaquetteChain::operator+=(const PlaquetteChain& o) {
    require_model(model, o.model);
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

PlaquetteChain& PlaquetteChain::operator-=(const PlaquetteChain& o) {
    require_model(model, o.model);
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

PlaquetteChain operator*(const LaurentPoly& r, const PlaquetteChain& c) {
    PlaquetteChain out = c;
    for (auto& p : out.coords) p = r * p;
    return out;
}

bool PlaquetteChain::is_zero() const {
    for (const auto& p : coords)
        if (!p.is_zero()) return false;
    return true;
}

std::string PlaquetteChain::to_string() const {
    return chain_string(coords, [&](int i) { return plaquette_name(model, i); });
}

// ---------------------------------------------------------------- EdgeChain

EdgeChain EdgeChain::zero(Model m) {
    return {m, std::vector<LaurentPoly>(edge_count(m), LaurentPoly(group_rank(m)))};
}

EdgeChain& EdgeChain::operator+=(const EdgeChain& o) {
    require_model(model, o.model);
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

EdgeChain operator*(const LaurentPoly& r, const EdgeChain& c) {
    EdgeChain out = c;
    for (auto& p : out.coords) p = r * p;
    return out;
}

bool EdgeChain::is_zero() const {
    for (const auto& p : coords)
        if (!p.is_zero()) return false;
    return true;
}

LaurentPoly EdgeChain::boundary() const {
    const int d = group_rank(model);
    if (model == Model::Relative2) {
        // Tops and bottoms are contracted: a vertical segment has boundary
        // (top point) - (bottom point), so a chain is a cycle iff its
        // coefficients sum to zero.
        return LaurentPoly::constant(d, augmentation(coords[0]));
    }
    LaurentPoly b(d);
    for (int i = 0; i < d; ++i) b -= om(model, i) * coords[i];
    return b;
}

std::string EdgeChain::to_string() const {
    return chain_string(coords, [&](int i) { return edge_name(model, i); });
}

// ---------------------------------------------------------------- MeridianChain

MeridianChain& MeridianChain::operator+=(const MeridianChain& o) {
    if (dim == 0) dim = o.dim;
    for (const auto& [label, p] : o.coords) {
        auto [it, inserted] = coords.try_emplace(label, p);
        if (!inserted) it->second += p;
    }
    return *this;
}

MeridianChain operator*(const LaurentPoly& r, const MeridianChain& c) {
    MeridianChain out = c;
    for (auto& [label, p] : out.coords) p = r * p;
    return out;
}

LaurentPoly MeridianChain::coefficient(const std::string& label) const {
    auto it = coords.find(label);
    return it == coords.end() ? LaurentPoly(dim) : it->second;
}

std::string MeridianChain::to_string() const {
    std::string out;
    for (const auto& [label, p] : coords) {
        if (p.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + p.to_string() + ")*" + label;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- j and relations

EdgeChain j_boundary(const PlaquetteChain& p) {
    const Model m = p.model;
    EdgeChain e = EdgeChain::zero(m);
    switch (m) {
        case Model::Relative2:
            e.coords[0] = om(m, 1) * p.coords[0] + om(m, 0) * p.coords[1];
            break;
        case Model::Planar2:
            e.coords[0] = om(m, 1) * p.coords[0];
            e.coords[1] = -(om(m, 0) * p.coords[0]);
            break;
        case Model::Cubical3: {
            const auto& a = p.coords[0];
            const auto& b = p.coords[1];
            const auto& c = p.coords[2];
            e.coords[0] = om(m, 1) * c - om(m, 2) * b;
            e.coords[1] = om(m, 2) * a - om(m, 0) * c;
            e.coords[2] = om(m, 0) * b - om(m, 1) * a;
            break;
        }
    }
    return e;
}

PlaquetteChain relation_element(Model m) {
    PlaquetteChain r = PlaquetteChain::zero(m);
    switch (m) {
        case Model::Relative2:
            r.coords[0] = om(m, 0);
            r.coords[1] = -om(m, 1);
            break;
        case Model::Planar2:
            break;
        case Model::Cubical3:
            for (int i = 0; i < 3; ++i) r.coords[i] = om(m, i);
            break;
    }
    return r;
}

PlaquetteChain plaquettes_of_cycle(const EdgeChain& cycle) {
    const Model m = cycle.model;
    if (!cycle.boundary().is_zero()) throw NotACycle("edge chain is not a cycle");
    PlaquetteChain out = PlaquetteChain::zero(m);
    try {
        switch (m) {
            case Model::Relative2: {
                const LaurentPoly& f = cycle.coords[0];
                LaurentPoly b = f.evaluate_at_one(1).divide_one_minus(0);
                LaurentPoly a = (f - om(m, 0) * b).divide_one_minus(1);
                out.coords[0] = std::move(a);
                out.coords[1] = std::move(b);
                break;
            }
            case Model::Planar2:
                out.coords[0] = cycle.coords[0].divide_one_minus(1);
                break;
            case Model::Cubical3: {
                const auto& ex = cycle.coords[0];
                const auto& ey = cycle.coords[1];
                LaurentPoly c = ex.evaluate_at_one(2).divide_one_minus(1);
                LaurentPoly b = (om(m, 1) * c - ex).divide_one_minus(2);
                LaurentPoly a = (ey + om(m, 0) * c).divide_one_minus(2);
                out.coords = {std::move(a), std::move(b), std::move(c)};
                break;
            }
        }
    } catch (const InvalidInput& e) {
        throw NotACycle(std::string("cycle has no plaquette decomposition: ") + e.what());
    }
    if (!(j_boundary(out) == cycle)) throw NotACycle("plaquette decomposition does not reproduce cycle");
    return out;
}

PlaquetteChain canonical(const PlaquetteChain& p) { return plaquettes_of_cycle(j_boundary(p)); }

}  // namespace fillcert
