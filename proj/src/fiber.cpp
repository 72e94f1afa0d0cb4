#include "kmlab/fiber.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace kmlab {

namespace {

Perm compose(const Perm& f, const Perm& g) {  // (f g)(x) = f(g(x))
    Perm out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
    return out;
}

Perm inverse(const Perm& f) {
    Perm out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
    return out;
}

bool is_identity(const Perm& f) {
    for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] != static_cast<int>(x)) return false;
    return true;
}

void check_subgroup(const std::map<Perm, int>& index, const std::vector<Perm>& group,
                    const std::vector<int>& sub, const char* what) {
    std::set<int> members(sub.begin(), sub.end());
    if (members.size() != sub.size()) throw DomainError(std::string(what) + ": repeated element");
    bool has_id = false;
    for (int i : sub) {
        if (i < 0 || i >= static_cast<int>(group.size()))
            throw DomainError(std::string(what) + ": index out of range");
        has_id = has_id || is_identity(group[i]);
        auto inv = index.find(inverse(group[i]));
        if (inv == index.end() || !members.count(inv->second))
            throw DomainError(std::string(what) + ": not closed under inverse");
        for (int j : sub) {
            auto prod = index.find(compose(group[i], group[j]));
            if (prod == index.end() || !members.count(prod->second))
                throw DomainError(std::string(what) + ": not closed under composition");
        }
    }
    if (!has_id) throw DomainError(std::string(what) + ": missing identity");
}

void check_stable(const std::vector<Perm>& group, const std::vector<int>& sub,
                  const std::vector<char>& mask, const char* what) {
    for (int i : sub)
        for (std::size_t x = 0; x < mask.size(); ++x)
            if (mask[x] && !mask[group[i][x]])
                throw DomainError(std::string(what) + ": subset is not stable");
}

std::map<Perm, int> index_of(const std::vector<Perm>& group) {
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
    return index;
}

}  // namespace

void validate_model(const FiniteActionModel& model) {
    if (model.n <= 0) throw DomainError("model: empty set");
    for (const Perm& f : model.group) {
        if (static_cast<int>(f.size()) != model.n) throw DomainError("model: size mismatch");
        std::vector<char> seen(model.n, 0);
        for (int v : f) {
            if (v < 0 || v >= model.n || seen[v]) throw DomainError("model: not a permutation");
            seen[v] = 1;
        }
    }
    if (static_cast<int>(model.d0.size()) != model.n ||
        static_cast<int>(model.d_xi.size()) != model.n)
        throw DomainError("model: subset mask size mismatch");

    const auto index = index_of(model.group);
    if (index.size() != model.group.size()) throw DomainError("model: repeated group element");
    std::vector<int> all(model.group.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    check_subgroup(index, model.group, all, "group");
    check_subgroup(index, model.group, model.gamma0, "gamma0");
    check_subgroup(index, model.group, model.gamma_xi, "gamma_xi");

    for (const Perm& f : model.group) {
        if (is_identity(f)) continue;
        for (int x = 0; x < model.n; ++x)
            if (f[x] == x) throw NonFreeAction("non-identity element has a fixed point");
    }

    check_stable(model.group, model.gamma0, model.d0, "d0");
    check_stable(model.group, model.gamma_xi, model.d_xi, "d_xi");
}

FiberReport fiber_product_decomposition(const FiniteActionModel& model) {
    validate_model(model);
    const auto index = index_of(model.group);

    auto orbit_rep = [&](const std::vector<int>& sub, int z) {
        int best = z;
        for (int i : sub) best = std::min(best, model.group[i][z]);
        return best;
    };
    std::vector<int> all(model.group.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);

    // The fiber product K: pairs of orbits over a common Gamma-orbit.
    std::set<std::pair<int, int>> k;
    for (int z = 0; z < model.n; ++z) {
        if (!model.d0[z]) continue;
        for (int w = 0; w < model.n; ++w) {
            if (!model.d_xi[w]) continue;
            if (orbit_rep(all, z) != orbit_rep(all, w)) continue;
            k.insert({orbit_rep(model.gamma0, z), orbit_rep(model.gamma_xi, w)});
        }
    }

    FiberReport rep;
    rep.k_size = k.size();

    // Double cosets gamma0 \ Gamma / gamma_xi by canonical (minimal) element.
    std::map<int, int> coset_rep;  // element index -> canonical index
    for (std::size_t gi = 0; gi < model.group.size(); ++gi) {
        int best = static_cast<int>(model.group.size());
        for (int a : model.gamma0)
            for (int c : model.gamma_xi) {
                const Perm p =
                    compose(model.group[a], compose(model.group[gi], model.group[c]));
                best = std::min(best, index.at(p));
            }
        coset_rep[static_cast<int>(gi)] = best;
    }
    std::set<int> cosets;
    for (const auto& [gi, rep_idx] : coset_rep) cosets.insert(rep_idx);
    rep.coset_count = cosets.size();

    // Assemble the decomposition side and its images.
    bool ok = true;
    std::set<std::pair<int, int>> images;
    for (int gi : cosets) {
        const Perm& gamma = model.group[gi];
        const Perm gamma_inv = inverse(gamma);

        std::vector<int> stab;  // gamma0 cap gamma gamma_xi gamma^{-1}
        for (int a : model.gamma0) {
            const Perm conj = compose(gamma_inv, compose(model.group[a], gamma));
            auto it = index.at(conj);
            if (std::find(model.gamma_xi.begin(), model.gamma_xi.end(), it) !=
                model.gamma_xi.end())
                stab.push_back(a);
        }

        std::vector<char> seen(model.n, 0);
        for (int z = 0; z < model.n; ++z) {
            if (seen[z] || !model.d0[z] || !model.d_xi[gamma_inv[z]]) continue;
            // One orbit of the stabilizer on d0 cap gamma d_xi.
            ++rep.union_size;
            std::pair<int, int> image{-1, -1};
            for (int s : stab) {
                const int z2 = model.group[s][z];
                if (!model.d0[z2] || !model.d_xi[gamma_inv[z2]]) {
                    ok = false;  // orbit escapes the intersection: hypothesis broken
                    continue;
                }
                seen[z2] = 1;
                const std::pair<int, int> im{orbit_rep(model.gamma0, z2),
                                             orbit_rep(model.gamma_xi, gamma_inv[z2])};
                if (image.first < 0)
                    image = im;
                else if (image != im)
                    ok = false;  // not well-defined on the orbit
            }
            if (image.first >= 0 && !images.insert(image).second) ok = false;  // not injective
        }
    }

    rep.ok = ok && images == k;
    return rep;
}

}  // namespace kmlab
