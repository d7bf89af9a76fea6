#include "fillcert/fingers.hpp"

#include "fillcert/errors.hpp"

namespace fillcert {

FingerMoveMap FingerMoveMap::zero(Model m) {
    FingerMoveMap f;
    f.model = m;
    f.assignments.assign(edge_count(m), MeridianChain{group_rank(m), {}});
    return f;
}

MeridianChain FingerMoveMap::apply(const EdgeChain& e) const {
    if (e.model != model) throw InvalidInput("finger map and edge chain live in different models");
    MeridianChain out;
    out.dim = group_rank(model);
    for (size_t g = 0; g < assignments.size(); ++g) {
        if (e.coords[g].is_zero()) continue;
        out += e.coords[g] * assignments[g];
    }
    return out;
}

FingerMoveMap& FingerMoveMap::operator+=(const FingerMoveMap& o) {
    if (model != o.model) throw InvalidInput("finger maps live in different models");
    for (size_t g = 0; g < assignments.size(); ++g) assignments[g] += o.assignments[g];
    return *this;
}

MeridianChain perturbed_linking(const PlaquetteChain& c, const FingerMoveMap& f, const LinkSpec& link) {
    return linking(c, link) + f.apply(j_boundary(c));
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based stream: the n-th draw depends only on (seed, n).
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : key_(splitmix64(seed)) {}
    int64_t uniform(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<int64_t>(splitmix64(key_ ^ splitmix64(counter_++)) % span);
    }

private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace

FingerMoveMap random_finger_map(uint64_t seed, int support_radius, int value_degree, const LinkSpec& link) {
    if (support_radius < 0 || value_degree < 0) throw InvalidInput("finger map parameters must be nonnegative");
    const Model m = link_model(link);
    const int d = group_rank(m);
    FingerMoveMap f = FingerMoveMap::zero(m);
    CounterRng rng(seed);
    for (auto& value : f.assignments) {
        for (const auto& comp : link.components) {
            LaurentPoly p(d);
            for (int t = 0; t <= value_degree; ++t) {
                Exponents e(d);
                for (auto& x : e) x = rng.uniform(-support_radius, support_radius);
                p.add_term(e, static_cast<long>(rng.uniform(-3, 3)));
            }
            value.coords[comp.label] = p;
        }
    }
    return f;
}

InvarianceReport kernel_invariance_check(int k, const LinkSpec& link, const FingerMoveMap& f) {
    if (k < 0) throw InvalidInput("degree must be nonnegative");
    const Model m = link_model(link);
    InvarianceReport rep;
    rep.k = k;
    std::vector<LineQuotient> quotients;
    for (const auto& c : link.components) quotients.push_back(line_quotient(c.direction));
    const QuotientBasis hb = basis_H(k, link);
    for (const auto& el : basis_J(k, m).elements) {
        ++rep.checked;
        const PlaquetteChain c = emit(el, m);
        const MeridianChain delta = f.apply(j_boundary(c));
        for (size_t i = 0; i < link.components.size(); ++i) {
            const LaurentPoly p = quotients[i].project(delta.coefficient(link.components[i].label));
            const auto deg = filtration_degree(p, k + 1);
            if (deg && *deg < k + 1)
                rep.violations.push_back({el.label, "F(j(c)) on " + link.components[i].label + " only in I^" +
                                                        std::to_string(*deg) + ": " + p.to_string()});
        }
        const IntVector before = normal_form(linking(c, link), k, link, hb);
        const IntVector after = normal_form(perturbed_linking(c, f, link), k, link, hb);
        if (before != after) rep.violations.push_back({el.label, "degree-" + std::to_string(k) + " class changed"});
    }
    return rep;
}

}  // namespace fillcert
