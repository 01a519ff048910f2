#include "dicut/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace dicut {

VertexSet Condensation::lift(const std::vector<char>& chosen, std::size_t num_vertices) const {
  VertexSet out(num_vertices);
  for (int c = 0; c < count(); ++c)
    if (chosen[c])
      for (VertexId v : members[c]) out.insert(v);
  return out;
}

Condensation condensation(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), raw(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  struct Frame {
    VertexId v;
    std::size_t pos;
  };
  std::vector<Frame> call;
  int next_index = 0;
  int raw_count = 0;

  for (VertexId s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = 1;
    call.push_back({s, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = d.out_edges(f.v);
      if (f.pos < outs.size()) {
        const VertexId v = f.v;
        const VertexId u = d.edge(outs[f.pos++]).head;
        if (index[u] == -1) {
          index[u] = low[u] = next_index++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexId u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = 0;
          raw[u] = raw_count;
        } while (u != v);
        ++raw_count;
      }
    }
  }

  Condensation c;
  std::vector<int> renumber(raw_count, -1);
  c.scc_of.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (renumber[raw[v]] == -1) {
      renumber[raw[v]] = c.count();
      c.members.emplace_back();
    }
    c.scc_of[v] = renumber[raw[v]];
    c.members[c.scc_of[v]].push_back(v);
  }
  for (const Edge& e : d.edges()) {
    const int a = c.scc_of[e.tail];
    const int b = c.scc_of[e.head];
    if (a != b) c.dag_edges.emplace_back(a, b);
  }
  std::sort(c.dag_edges.begin(), c.dag_edges.end());
  c.dag_edges.erase(std::unique(c.dag_edges.begin(), c.dag_edges.end()), c.dag_edges.end());
  c.succ.resize(c.count());
  c.pred.resize(c.count());
  for (auto [a, b] : c.dag_edges) {
    c.succ[a].push_back(b);
    c.pred[b].push_back(a);
  }
  return c;
}

namespace {

void require_connected(const Digraph& d) {
  if (!is_weakly_connected(d)) throw PreconditionViolated("digraph is not weakly connected");
}

// Components ordered so that every component comes after all of its successors.
std::vector<int> sink_first_order(const Condensation& c) {
  std::vector<int> outdeg(c.count());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < c.count(); ++i) {
    outdeg[i] = static_cast<int>(c.succ[i].size());
    if (outdeg[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(i);
    for (int p : c.pred[i])
      if (--outdeg[p] == 0) ready.push(p);
  }
  return order;
}

class DibondSearch {
 public:
  DibondSearch(const Digraph& d, const Condensation& c, std::size_t cap)
      : d_(d), c_(c), cap_(cap), side_(c.count(), -1), adj_(c.count()) {
    for (int i = 0; i < c.count(); ++i) {
      adj_[i] = c.succ[i];
      adj_[i].insert(adj_[i].end(), c.pred[i].begin(), c.pred[i].end());
      std::sort(adj_[i].begin(), adj_[i].end());
    }
    int root = 0;
    for (int i = 1; i < c.count(); ++i)
      if (adj_[i].size() > adj_[root].size()) root = i;
    std::vector<char> seen(c.count(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      const int i = q.front();
      q.pop();
      order_.push_back(i);
      for (int j : adj_[i])
        if (!seen[j]) {
          seen[j] = 1;
          q.push(j);
        }
    }
    for (int i = 0; i < c.count(); ++i)
      if (!seen[i]) order_.push_back(i);
  }

  /// Forces a component to a side before searching; false on contradiction.
  bool force(int comp, int side) {
    std::vector<int> trail;
    return assign(comp, side, trail) && feasible();
  }

  std::vector<Dicut> run() {
    if (c_.count() >= 2) search(0);
    sort_canonical(found_);
    return std::move(found_);
  }

 private:
  bool assign(int comp, int side, std::vector<int>& trail) {
    std::vector<int> stack{comp};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      if (side_[i] == side) continue;
      if (side_[i] != -1) return false;
      side_[i] = side;
      trail.push_back(i);
      for (int j : side == 1 ? c_.succ[i] : c_.pred[i]) stack.push_back(j);
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int i : trail) side_[i] = -1;
    trail.clear();
  }

  // Each side must still be able to become nonempty and connected.
  bool feasible() {
    for (int s = 0; s < 2; ++s) {
      int start = -1;
      int assigned = 0;
      int open = 0;
      for (int i = 0; i < c_.count(); ++i) {
        if (side_[i] == s) {
          ++assigned;
          if (start == -1) start = i;
        }
        if (side_[i] == s || side_[i] == -1) ++open;
      }
      if (open == 0) return false;
      if (start == -1) continue;
      std::vector<char> seen(c_.count(), 0);
      std::vector<int> stack{start};
      seen[start] = 1;
      int reached = 0;
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        if (side_[i] == s) ++reached;
        for (int j : adj_[i]) {
          if (seen[j] || (side_[j] != s && side_[j] != -1)) continue;
          seen[j] = 1;
          stack.push_back(j);
        }
      }
      if (reached != assigned) return false;
    }
    return true;
  }

  void search(std::size_t pos) {
    while (pos < order_.size() && side_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) {
      std::vector<char> in(c_.count());
      bool has_x = false;
      bool has_y = false;
      for (int i = 0; i < c_.count(); ++i) {
        in[i] = side_[i] == 1;
        (in[i] ? has_y : has_x) = true;
      }
      if (!has_x || !has_y) return;
      if (found_.size() >= cap_) throw CapExceeded(cap_);
      found_.emplace_back(d_, c_.lift(in, d_.num_vertices()));
      return;
    }
    const int comp = order_[pos];
    std::vector<int> trail;
    for (int s : {1, 0}) {
      if (assign(comp, s, trail) && feasible()) search(pos + 1);
      undo(trail);
    }
  }

  const Digraph& d_;
  const Condensation& c_;
  std::size_t cap_;
  std::vector<int> side_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  std::vector<Dicut> found_;
};

}  // namespace

std::vector<Dicut> enumerate_dicuts(const Digraph& d, std::size_t cap) {
  require_connected(d);
  const Condensation c = condensation(d);
  const std::vector<int> order = sink_first_order(c);
  const int k = c.count();
  std::vector<char> chosen(k, 0);
  std::vector<Dicut> out;
  std::function<void(int, int)> rec = [&](int i, int included) {
    if (i == k) {
      if (included == 0 || included == k) return;
      if (out.size() >= cap) throw CapExceeded(cap);
      out.emplace_back(d, c.lift(chosen, d.num_vertices()));
      return;
    }
    const int comp = order[i];
    rec(i + 1, included);
    for (int s : c.succ[comp])
      if (!chosen[s]) return;
    chosen[comp] = 1;
    rec(i + 1, included + 1);
    chosen[comp] = 0;
  };
  rec(0, 0);
  sort_canonical(out);
  return out;
}

std::vector<Dicut> enumerate_dibonds(const Digraph& d, std::size_t cap) {
  require_connected(d);
  const Condensation c = condensation(d);
  return DibondSearch(d, c, cap).run();
}

std::vector<Dicut> dibonds_containing_edge(const Digraph& d, EdgeId e, std::size_t cap) {
  if (e >= d.num_edges()) throw std::invalid_argument("edge id out of range");
  require_connected(d);
  const Condensation c = condensation(d);
  const int t = c.scc_of[d.edge(e).tail];
  const int h = c.scc_of[d.edge(e).head];
  if (t == h) return {};
  DibondSearch search(d, c, cap);
  if (!search.force(t, 0) || !search.force(h, 1)) return {};
  return search.run();
}

}  // namespace dicut
