#include "yutsis/canonical.hpp"

#include <algorithm>

namespace yutsis {

namespace {

// Backtracking search for the relabeling that minimizes the sorted edge
// list. Labels are assigned in order 0, 1, 2, ...; a label is handed out the
// moment it is first needed, so the search walks exactly the labelings whose
// labels appear in first-use order. Any other labeling can be strictly
// improved by swapping the two out-of-order labels, so the minimum over this
// set is the global minimum. Rows are compared against the best edge list
// found so far and branches prune as soon as their determined prefix loses.
class Canonicalizer {
 public:
  explicit Canonicalizer(const CubicGraph& g)
      : g_(g), n_(g.n()), label_of_(n_, -1), orig_of_(n_, -1) {
    cur_.reserve(g.edges().size());
  }

  CanonicalForm run() {
    descend(0, false);
    return {std::move(best_), std::move(best_label_of_)};
  }

 private:
  // lt: cur_ ran strictly below best_ at the moment it was compared. A
  // descendant may have replaced best_ with an extension of our own prefix
  // since then, so the leaf always does the full comparison itself.
  void descend(int u, bool lt) {
    if (u == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_label_of_ = label_of_;
        have_best_ = true;
      }
      return;
    }
    if (orig_of_[u] < 0) {
      // Frontier exhausted: start of the search or of a new component.
      for (int c = 0; c < n_; ++c) {
        if (label_of_[c] >= 0) continue;
        assign(c, u);
        process_row(u, lt);
        unassign(c, u);
      }
      return;
    }
    process_row(u, lt);
  }

  void process_row(int u, bool lt) {
    const int x = orig_of_[u];
    int fixed[3];
    int fresh[3];
    int nfixed = 0;
    int nfresh = 0;
    for (int nb : g_.neighbors(x)) {
      int l = label_of_[nb];
      if (l < 0)
        fresh[nfresh++] = nb;
      else if (l > u)
        fixed[nfixed++] = l;
    }
    std::sort(fixed, fixed + nfixed);

    static const int kOrders[4][6][3] = {
        {{0, 0, 0}},
        {{0, 0, 0}},
        {{0, 1, 0}, {1, 0, 0}},
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}},
    };
    const int norders = nfresh <= 1 ? 1 : (nfresh == 2 ? 2 : 6);

    for (int oi = 0; oi < norders; ++oi) {
      int first_free = next_free_;
      for (int k = 0; k < nfresh; ++k)
        assign(fresh[kOrders[nfresh][oi][k]], first_free + k);

      // Row edges: (u, fixed...) then (u, new labels...), already sorted.
      std::size_t mark = cur_.size();
      bool row_lt = lt;
      bool pruned = false;
      for (int k = 0; k < nfixed + nfresh && !pruned; ++k) {
        Edge e(u, k < nfixed ? fixed[k] : first_free + (k - nfixed));
        if (!row_lt && have_best_) {
          const Edge& b = best_[cur_.size()];
          if (b < e) {
            pruned = true;
            break;
          }
          if (e < b) row_lt = true;
        }
        cur_.push_back(e);
      }
      if (!pruned) descend(u + 1, row_lt);
      cur_.resize(mark);

      for (int k = nfresh - 1; k >= 0; --k)
        unassign(fresh[kOrders[nfresh][oi][k]], first_free + k);
    }
  }

  void assign(int orig, int label) {
    label_of_[orig] = label;
    orig_of_[label] = orig;
    ++next_free_;
  }

  void unassign(int orig, int label) {
    label_of_[orig] = -1;
    orig_of_[label] = -1;
    --next_free_;
  }

  const CubicGraph& g_;
  int n_;
  std::vector<int> label_of_;
  std::vector<int> orig_of_;
  int next_free_ = 0;
  EdgeList cur_;
  EdgeList best_;
  std::vector<int> best_label_of_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const CubicGraph& g) { return Canonicalizer(g).run(); }

bool are_isomorphic(const CubicGraph& a, const CubicGraph& b) {
  if (a.n() != b.n()) return false;
  return canonical_form(a).edges == canonical_form(b).edges;
}

CubicGraph relabel(const CubicGraph& g, const std::vector<int>& perm) {
  EdgeList edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return CubicGraph(g.n(), std::move(edges));
}

}  // namespace yutsis
