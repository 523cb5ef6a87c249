#include "kthit/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "kthit/errors.hpp"

namespace kthit {

namespace {

bool is_complete(const Graph& h) {
    int n = h.num_vertices();
    return h.num_edges() == n * (n - 1) / 2;
}

bool is_biconnected(const Graph& h) {
    if (h.num_vertices() < 3 || !is_connected(h)) return false;
    return biconnected_components(h).blocks.size() == 1;
}

void validate_formula(const CnfFormula& phi) {
    if (phi.num_vars < 1) throw PreconditionViolated("formula has no variables");
    for (const auto& clause : phi.clauses) {
        if (clause.empty()) throw PreconditionViolated("formula has an empty clause");
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > phi.num_vars) throw PreconditionViolated("literal out of range");
    }
}

// Incrementally assembled output graph with role tags and tagged copies.
struct Builder {
    Graph g;
    std::map<Vertex, std::string> tags;
    std::vector<TaggedCopy> copies;

    Vertex fresh(const std::string& tag) {
        Vertex v = g.add_vertex();
        tags[v] = tag;
        return v;
    }

    // Adds the pattern edges between the given images (edges already present are kept).
    void add_pattern_edges(const Graph& h, const std::vector<Vertex>& embedding) {
        for (auto [a, b] : h.edges())
            if (embedding[a] >= 0 && embedding[b] >= 0) g.add_edge(embedding[a], embedding[b]);
    }

    std::vector<Vertex> add_copy(const Graph& h, const std::string& tag) {
        std::vector<Vertex> emb;
        for (int i = 0; i < h.num_vertices(); ++i) emb.push_back(fresh(tag));
        add_pattern_edges(h, emb);
        copies.push_back({tag, emb});
        return emb;
    }

    void complete_copy(const Graph& h, const std::vector<Vertex>& embedding, const std::string& tag) {
        add_pattern_edges(h, embedding);
        copies.push_back({tag, embedding});
    }

    // Vertices playing `roles` of h, with the edges of h among them.
    std::vector<Vertex> add_induced(const Graph& h, const VertexSet& roles, int size, const std::string& tag) {
        std::vector<Vertex> out;
        for (int i = 0; i < size; ++i) out.push_back(fresh(tag));
        for (std::size_t i = 0; i < roles.size(); ++i)
            for (std::size_t j = i + 1; j < roles.size(); ++j)
                if (h.adjacent(roles[i], roles[j])) g.add_edge(out[i], out[j]);
        return out;
    }
};

VertexSet rest_of(const Graph& h, const VertexSet& used) { return set_difference(all_vertices(h), used); }

ReductionOutput finish(Builder& b, const Graph& h, const VertexSet& x, long long budget) {
    ReductionOutput out;
    out.graph = std::move(b.g);
    out.modulator = x;
    out.budget = budget;
    out.role_tags = std::move(b.tags);
    out.copies = std::move(b.copies);
    out.h = h;
    for (const TaggedCopy& c : out.copies)
        if (!verify_embedding(h, out.graph, c.embedding, false))
            throw InvariantBroken("tagged " + c.tag + " is not a copy of h");
    return out;
}

}  // namespace

std::pair<VertexSet, VertexSet> find_anticomplete_pair(const Graph& h) {
    if (is_complete(h)) throw IsClique("find_anticomplete_pair requires a graph that is not complete");
    int n = h.num_vertices();
    if (n > 12) throw CapExceeded("find_anticomplete_pair: more than 12 vertices");
    std::vector<int> side(n, 0);
    int best = 0;
    VertexSet best_a, best_b;
    // Enumerate every assignment of the vertices to {outside, A, B}.
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        VertexSet a, b;
        for (int i = 0; i < n; ++i) {
            side[i] = static_cast<int>(c % 3);
            c /= 3;
            if (side[i] == 1) a.push_back(i);
            if (side[i] == 2) b.push_back(i);
        }
        if (a.empty() || b.empty()) continue;
        int size = static_cast<int>(a.size() + b.size());
        if (size < best) continue;
        bool anticomplete = true;
        for (Vertex x : a)
            for (Vertex y : b)
                if (h.adjacent(x, y)) anticomplete = false;
        if (!anticomplete) continue;
        if (size > best || std::tie(a, b) < std::tie(best_a, best_b)) {
            best = size;
            best_a = a;
            best_b = b;
        }
    }
    if (best_b.size() > best_a.size()) std::swap(best_a, best_b);
    return {best_a, best_b};
}

bool has_stable_cutset(const Graph& h) {
    int n = h.num_vertices();
    if (n > 12) throw CapExceeded("has_stable_cutset: more than 12 vertices");
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        bool independent = true;
        for (std::size_t i = 0; i < s.size() && independent; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (h.adjacent(s[i], s[j])) independent = false;
        if (!independent) continue;
        if (connected_components(remove_vertices(h, s).graph).size() >= 2) return true;
    }
    return false;
}

VedRoles ved_roles(const Graph& h) {
    VedRoles r;
    int n = h.num_vertices();
    for (Vertex a = 0; a < n && r.u < 0; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!h.adjacent(a, b)) {
                r.u = a;
                r.v = b;
                break;
            }
    if (r.u < 0) throw IsClique("pattern is complete");
    for (Vertex c = 0; c < n; ++c)
        if (c != r.u && c != r.v) {
            r.w = c;
            break;
        }
    if (r.w < 0) throw PreconditionViolated("pattern needs a third vertex");
    r.z_plus = 0;
    r.z_minus = 1;
    return r;
}

GadgetRoles gadget_roles(const Graph& h) {
    GadgetRoles r;
    std::tie(r.a_set, r.b_set) = find_anticomplete_pair(h);
    VertexSet ab = set_union(r.a_set, r.b_set);
    for (Vertex c = 0; c < h.num_vertices(); ++c)
        if (!contains(ab, c)) {
            r.w = c;
            break;
        }
    if (r.w < 0) throw PreconditionViolated("A and B cover the pattern, so it is disconnected");
    r.s = 0;
    r.t = 1;
    r.z_plus = 0;
    r.z_minus = 1;
    return r;
}

namespace {

AbGadget add_gadget(Builder& b, const Graph& h, const VertexSet& a_set, const VertexSet& b_set, Vertex s, Vertex t) {
    if (s == t || s < 0 || t < 0 || s >= h.num_vertices() || t >= h.num_vertices())
        throw PreconditionViolated("s and t must be distinct vertices of h");
    if (a_set.empty() || b_set.empty() || intersects(a_set, b_set)) throw PreconditionViolated("A and B must be disjoint and nonempty");
    for (Vertex x : a_set)
        for (Vertex y : b_set)
            if (h.adjacent(x, y)) throw PreconditionViolated("A and B are not anticomplete");
    if (b_set.size() > a_set.size()) throw PreconditionViolated("the gadget requires |A| >= |B|");
    AbGadget gad;
    int copies = 2 * static_cast<int>(a_set.size());
    for (int i = 0; i < copies; ++i) gad.attachments.push_back(b.fresh("gadget-attachment"));
    for (int i = 0; i < copies; ++i) {
        std::vector<Vertex> emb(h.num_vertices(), -1);
        emb[s] = gad.attachments[i];
        emb[t] = gad.attachments[(i + copies - 1) % copies];
        for (int x = 0; x < h.num_vertices(); ++x)
            if (emb[x] < 0) emb[x] = b.fresh("gadget-copy");
        b.complete_copy(h, emb, "gadget-copy");
        gad.copies.push_back(emb);
    }
    for (int i = 0; i < copies; ++i) (i % 2 == 0 ? gad.a_vertices : gad.b_vertices).push_back(gad.attachments[i]);
    for (std::size_t i = 0; i < a_set.size(); ++i)
        for (std::size_t j = i + 1; j < a_set.size(); ++j)
            if (h.adjacent(a_set[i], a_set[j])) b.g.add_edge(gad.a_vertices[i], gad.a_vertices[j]);
    for (std::size_t i = 0; i < b_set.size(); ++i)
        for (std::size_t j = i + 1; j < b_set.size(); ++j)
            if (h.adjacent(b_set[i], b_set[j])) b.g.add_edge(gad.b_vertices[i], gad.b_vertices[j]);
    return gad;
}

}  // namespace

AbGadget build_ab_gadget(const Graph& h, const VertexSet& a_set, const VertexSet& b_set, Vertex s, Vertex t_vertex) {
    Builder b;
    AbGadget gad = add_gadget(b, h, a_set, b_set, s, t_vertex);
    gad.graph = std::move(b.g);
    return gad;
}

ReductionOutput reduce_cnf_ved(const CnfFormula& phi, const Graph& h) {
    validate_formula(phi);
    if (!is_biconnected(h)) throw PreconditionViolated("pattern must be biconnected");
    if (is_complete(h)) throw PreconditionViolated("pattern must not be a clique");
    VedRoles r = ved_roles(h);
    VertexSet h_prime = rest_of(h, make_set({r.u, r.v, r.w}));
    if (h_prime.empty()) throw PreconditionViolated("H - {u, v, w} is empty");

    Builder b;
    std::vector<std::vector<Vertex>> var_copy;
    VertexSet x;
    for (int i = 0; i < phi.num_vars; ++i) {
        var_copy.push_back(b.add_copy(h, "variable-copy"));
        x = set_union(x, make_set(var_copy.back()));
    }
    long long budget = phi.num_vars;
    for (const auto& clause : phi.clauses) {
        int c = static_cast<int>(clause.size());
        budget += c - 1;
        std::vector<Vertex> us(c), vs(c + 1);
        us[0] = b.fresh("clause-endpoint");
        for (int i = 1; i <= c - 1; ++i) {
            auto emb = b.add_copy(h, "clause-copy");
            us[i] = emb[r.u];
            vs[i] = emb[r.v];
        }
        vs[c] = b.fresh("clause-endpoint");
        for (int i = 1; i <= c; ++i) {
            int lit = clause[i - 1];
            Vertex z = var_copy[std::abs(lit) - 1][lit > 0 ? r.z_plus : r.z_minus];
            std::vector<Vertex> emb(h.num_vertices(), -1);
            emb[r.w] = z;
            emb[r.u] = us[i - 1];
            emb[r.v] = vs[i];
            for (Vertex p : h_prime) emb[p] = b.fresh("H'-copy");
            b.complete_copy(h, emb, "transversal");
        }
    }
    return finish(b, h, x, budget);
}

ReductionOutput reduce_cnf_td(const CnfFormula& phi, const Graph& h) {
    validate_formula(phi);
    if (is_complete(h)) throw PreconditionViolated("pattern must not be a clique");
    if (!is_connected(h)) throw PreconditionViolated("pattern must be connected");
    if (has_stable_cutset(h)) throw PreconditionViolated("pattern has a stable cutset");
    GadgetRoles r = gadget_roles(h);
    const int a = static_cast<int>(r.a_set.size());
    VertexSet h_prime = rest_of(h, set_union(set_union(r.a_set, r.b_set), {r.w}));

    Builder b;
    std::vector<std::vector<Vertex>> var_copy;
    VertexSet x;
    for (int i = 0; i < phi.num_vars; ++i) {
        var_copy.push_back(b.add_copy(h, "variable-copy"));
        x = set_union(x, make_set(var_copy.back()));
    }
    long long budget = phi.num_vars;
    for (const auto& clause : phi.clauses) {
        int c = static_cast<int>(clause.size());
        budget += static_cast<long long>(a) * (c - 1);
        std::vector<std::vector<Vertex>> a_side(c), b_side(c + 1);
        a_side[0] = b.add_induced(h, r.a_set, a, "clause-endpoint");
        for (int i = 1; i <= c - 1; ++i) {
            AbGadget gad = add_gadget(b, h, r.a_set, r.b_set, r.s, r.t);
            a_side[i] = gad.a_vertices;
            b_side[i] = gad.b_vertices;
        }
        b_side[c] = b.add_induced(h, r.b_set, a, "clause-endpoint");
        std::vector<Vertex> f;
        for (std::size_t p = 0; p < h_prime.size(); ++p) f.push_back(b.fresh("H'-copy"));
        for (int i = 1; i <= c; ++i) {
            int lit = clause[i - 1];
            std::vector<Vertex> emb(h.num_vertices(), -1);
            emb[r.w] = var_copy[std::abs(lit) - 1][lit > 0 ? r.z_plus : r.z_minus];
            for (std::size_t p = 0; p < r.a_set.size(); ++p) emb[r.a_set[p]] = a_side[i - 1][p];
            for (std::size_t p = 0; p < r.b_set.size(); ++p) emb[r.b_set[p]] = b_side[i][p];
            for (std::size_t p = 0; p < h_prime.size(); ++p) emb[h_prime[p]] = f[p];
            b.complete_copy(h, emb, "transversal");
        }
    }
    return finish(b, h, x, budget);
}

int count_disjoint_copies(const ReductionOutput& out) {
    VertexSet used;
    int count = 0;
    for (const TaggedCopy& c : out.copies) {
        if (c.tag == "transversal") continue;
        VertexSet s = make_set(c.embedding);
        if (intersects(s, used)) continue;
        used = set_union(used, s);
        ++count;
    }
    return count;
}

}  // namespace kthit
