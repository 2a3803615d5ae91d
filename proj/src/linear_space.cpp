#include "zonotopal/linear_space.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/matroid.hpp"

namespace zono {

LinearSpace::LinearSpace(std::vector<std::string> labels, Mat basis)
    : labels_(std::move(labels)), basis_(std::move(basis)) {}

LinearSpace LinearSpace::make(std::vector<std::string> labels, const Mat& rows) {
    if (rows.cols() != labels.size()) throw ParseError("label count does not match matrix width");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw ParseError("duplicate ground-set label");
    Rref r = rref(rows);
    if (r.rank() != rows.rows()) throw RankDeficient("rows are linearly dependent");
    return LinearSpace(std::move(labels), std::move(r.mat));
}

std::size_t LinearSpace::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw UnknownLabel("unknown label '" + label + "'");
}

std::vector<std::string> LinearSpace::labels_for(const std::vector<std::size_t>& idx) const {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) {
        if (i >= labels_.size()) throw UnknownLabel("index out of range");
        out.push_back(labels_[i]);
    }
    return out;
}

LinearSpace gale_dual(const LinearSpace& a) {
    return LinearSpace::make(a.labels(), kernel_basis(a.basis()));
}

namespace {

std::vector<std::size_t> normalize_subset(const LinearSpace& a, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> idx = s;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (!idx.empty() && idx.back() >= a.n()) throw UnknownLabel("subset index out of range");
    return idx;
}

std::vector<std::size_t> indices_of(const LinearSpace& a, const std::vector<std::string>& labels) {
    std::vector<std::size_t> idx;
    idx.reserve(labels.size());
    for (const auto& l : labels) idx.push_back(a.label_index(l));
    return idx;
}

} // namespace

LinearSpace localization(const LinearSpace& a, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> idx = normalize_subset(a, s);
    Mat sub = a.basis().select_columns(idx);
    return LinearSpace::make(a.labels_for(idx), row_space_basis(sub));
}

LinearSpace localization_labels(const LinearSpace& a, const std::vector<std::string>& s) {
    return localization(a, indices_of(a, s));
}

LinearSpace contraction(const LinearSpace& a, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> idx = normalize_subset(a, s);
    std::vector<bool> in_s(a.n(), false);
    for (std::size_t i : idx) in_s[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < a.n(); ++i)
        if (!in_s[i]) rest.push_back(i);

    // Coefficient vectors x with x^T B vanishing on s, then restrict to E\s.
    Mat on_s = a.basis().select_columns(idx);
    Mat xs = kernel_basis(on_s.transpose());
    Mat vectors = xs * a.basis();
    return LinearSpace::make(a.labels_for(rest), row_space_basis(vectors.select_columns(rest)));
}

LinearSpace contraction_labels(const LinearSpace& a, const std::vector<std::string>& s) {
    return contraction(a, indices_of(a, s));
}

std::vector<ElementaryVector> elementary_vectors(const LinearSpace& a) {
    std::vector<ElementaryVector> out;
    if (a.rank() == 0) return out;

    Matroid dual = matroid_of(gale_dual(a));
    std::vector<std::uint32_t> circuits = dual.circuits();

    for (std::uint32_t c : circuits) {
        std::vector<std::size_t> supp, comp;
        for (std::size_t i = 0; i < a.n(); ++i)
            ((c >> i) & 1u ? supp : comp).push_back(i);

        // One-dimensional solve: x^T B vanishing outside the circuit.
        Mat off = a.basis().select_columns(comp);
        Mat xs = kernel_basis(off.transpose());
        if (xs.rows() != 1)
            throw Error("circuit of the dual matroid did not give a 1-dimensional solution space");
        Mat v = xs * a.basis();

        ElementaryVector ev;
        ev.coeffs = v.row(0);
        for (std::size_t i = 0; i < a.n(); ++i)
            if (!ev.coeffs[i].is_zero()) {
                ev.support.push_back(i);
                ev.support_mask |= (1u << i);
            }
        if (ev.support_mask != c) throw Error("support does not match the dual circuit");
        Rat lead_inv = ev.coeffs[ev.support.front()].inverse();
        for (Rat& x : ev.coeffs) x *= lead_inv;
        out.push_back(std::move(ev));
    }

    std::sort(out.begin(), out.end(), [](const ElementaryVector& x, const ElementaryVector& y) {
        return x.support < y.support;
    });
    return out;
}

std::size_t rho(const LinearSpace& a) {
    if (a.rank() == 0) throw EmptyL("rho is undefined for L = 0");
    std::size_t best = a.n() + 1;
    for (const auto& ev : elementary_vectors(a)) best = std::min(best, ev.m());
    return best;
}

LinearSpace from_graph(const std::vector<GraphEdge>& edges, GraphMode mode) {
    if (edges.empty()) throw ParseError("graph has no edges");

    std::map<std::string, std::size_t> vertex_id;
    for (const auto& e : edges) {
        vertex_id.emplace(e.tail, vertex_id.size());
        vertex_id.emplace(e.head, vertex_id.size());
    }
    std::size_t nv = vertex_id.size();
    std::size_t ne = edges.size();

    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& e : edges) {
        if (!seen.insert(e.label).second) throw ParseError("duplicate edge label '" + e.label + "'");
        labels.push_back(e.label);
    }

    // Spanning forest by union-find; non-tree edges give fundamental cycles.
    std::vector<std::size_t> parent(nv);
    for (std::size_t i = 0; i < nv; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<bool> in_tree(ne, false);
    std::size_t components = nv;
    for (std::size_t i = 0; i < ne; ++i) {
        std::size_t u = find(vertex_id[edges[i].tail]);
        std::size_t v = find(vertex_id[edges[i].head]);
        if (u != v) {
            parent[u] = v;
            in_tree[i] = true;
            --components;
        }
    }
    if (components != 1) throw DisconnectedGraph("graph is not connected");

    // Tree adjacency for path walks.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv); // (neighbor, edge)
    for (std::size_t i = 0; i < ne; ++i) {
        if (!in_tree[i]) continue;
        std::size_t u = vertex_id[edges[i].tail], v = vertex_id[edges[i].head];
        adj[u].push_back({v, i});
        adj[v].push_back({u, i});
    }

    // Signed tree path from src to dst (+1 when an edge is traversed along
    // its orientation).
    auto tree_path = [&](std::size_t src, std::size_t dst, std::vector<Rat>& cycle) {
        std::vector<long> prev_edge(nv, -1);
        std::vector<long> prev_vertex(nv, -1);
        std::vector<bool> visited(nv, false);
        std::vector<std::size_t> stack = {src};
        visited[src] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            if (x == dst) break;
            for (auto [y, e] : adj[x]) {
                if (visited[y]) continue;
                visited[y] = true;
                prev_edge[y] = static_cast<long>(e);
                prev_vertex[y] = static_cast<long>(x);
                stack.push_back(y);
            }
        }
        std::size_t cur = dst;
        while (cur != src) {
            std::size_t e = static_cast<std::size_t>(prev_edge[cur]);
            std::size_t from = static_cast<std::size_t>(prev_vertex[cur]);
            bool forward = vertex_id[edges[e].tail] == from && vertex_id[edges[e].head] == cur;
            cycle[e] += forward ? Rat(1) : Rat(-1);
            cur = from;
        }
    };

    Mat cycles(0, ne);
    for (std::size_t i = 0; i < ne; ++i) {
        if (in_tree[i]) continue;
        std::vector<Rat> cycle(ne);
        cycle[i] = Rat(1);
        std::size_t u = vertex_id[edges[i].tail], v = vertex_id[edges[i].head];
        if (u != v) tree_path(v, u, cycle); // close the cycle back to the tail
        cycles.append_row(cycle);
    }

    LinearSpace cyc = LinearSpace::make(labels, row_space_basis(cycles));
    return mode == GraphMode::cographical ? cyc : gale_dual(cyc);
}

} // namespace zono
