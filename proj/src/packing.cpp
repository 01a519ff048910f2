#include "packing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dicut::detail {

namespace {

class PackingSearch {
 public:
  PackingSearch(const PackingProblem& p, bool collect_all, std::size_t cap)
      : p_(p), collect_all_(collect_all), cap_(cap) {
    const std::size_t m = p.members.size();
    star_.assign(p.num_elements, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
      if (p.members[i].none()) throw std::invalid_argument("packing member is empty");
      for (auto x = p.members[i].find_first(); x != Bits::npos; x = p.members[i].find_next(x))
        star_[x].set(i);
    }
    conflict_.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        bool clash = p.members[i].intersects(p.members[j]);
        if (!p.extra_conflict.empty()) clash = clash || p.extra_conflict[i].test(j);
        if (clash) {
          conflict_[i].set(j);
          conflict_[j].set(i);
        }
      }
      conflict_[i].set(i);
    }
  }

  void run() {
    std::vector<std::size_t> chosen;
    Bits cand(p_.members.size());
    cand.set();
    search(cand, chosen);
  }

  std::vector<std::size_t> best;
  std::vector<std::vector<std::size_t>> all;

 private:
  // Number of element stars needed to cover the candidates; each star is a clique.
  std::size_t clique_cover(Bits remaining) const {
    std::size_t stars = 0;
    while (remaining.any()) {
      std::size_t best_x = 0;
      std::size_t best_count = 0;
      for (std::size_t x = 0; x < p_.num_elements; ++x) {
        const std::size_t c = (remaining & star_[x]).count();
        if (c > best_count) {
          best_count = c;
          best_x = x;
        }
      }
      remaining -= star_[best_x];
      ++stars;
    }
    return stars;
  }

  void record(const std::vector<std::size_t>& chosen) {
    if (!found_any_ || chosen.size() > best.size()) {
      found_any_ = true;
      best = chosen;
      std::sort(best.begin(), best.end());
      all.clear();
      if (collect_all_) all.push_back(best);
    } else if (collect_all_ && chosen.size() == best.size()) {
      if (all.size() >= cap_) throw CapExceeded(cap_);
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      all.push_back(std::move(sorted));
    }
  }

  void search(const Bits& cand, std::vector<std::size_t>& chosen) {
    if (cand.none()) {
      record(chosen);
      return;
    }
    if (found_any_) {
      const std::size_t ub = chosen.size() + clique_cover(cand);
      if (collect_all_ ? ub < best.size() : ub <= best.size()) return;
    }
    std::size_t pick = 0;
    std::size_t pick_count = 0;
    for (std::size_t x = 0; x < p_.num_elements; ++x) {
      const std::size_t c = (cand & star_[x]).count();
      if (c > 0 && (pick_count == 0 || c < pick_count)) {
        pick = x;
        pick_count = c;
      }
    }
    const Bits with_x = cand & star_[pick];
    for (auto m = with_x.find_first(); m != Bits::npos; m = with_x.find_next(m)) {
      chosen.push_back(m);
      search(cand - conflict_[m], chosen);
      chosen.pop_back();
    }
    search(cand - with_x, chosen);
  }

  const PackingProblem& p_;
  bool collect_all_;
  std::size_t cap_;
  bool found_any_ = false;
  std::vector<Bits> star_;
  std::vector<Bits> conflict_;
};

class HittingSearch {
 public:
  HittingSearch(std::size_t n, const std::vector<Bits>& members) : n_(n), members_(members) {
    for (const auto& m : members)
      if (m.none()) throw std::invalid_argument("cannot hit an empty member");
    best_size_ = n + 1;
  }

  void run() {
    Bits hit(n_), forbidden(n_);
    search(hit, forbidden, 0);
  }

  Bits best;

 private:
  void search(Bits& hit, const Bits& forbidden, std::size_t size) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (!members_[i].intersects(hit)) open.push_back(i);
    if (open.empty()) {
      if (size < best_size_) {
        best_size_ = size;
        best = hit;
      }
      return;
    }
    std::vector<Bits> allowed;
    allowed.reserve(open.size());
    for (std::size_t i : open) {
      allowed.push_back(members_[i] - forbidden);
      if (allowed.back().none()) return;
    }
    std::vector<std::size_t> by_size(open.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
      return allowed[a].count() < allowed[b].count();
    });
    Bits used(n_);
    std::size_t lower = 0;
    for (std::size_t k : by_size) {
      if (allowed[k].intersects(used)) continue;
      used |= allowed[k];
      ++lower;
    }
    if (size + lower >= best_size_) return;

    const Bits& branch = allowed[by_size.front()];
    Bits local = forbidden;
    for (auto x = branch.find_first(); x != Bits::npos; x = branch.find_next(x)) {
      hit.set(x);
      search(hit, local, size + 1);
      hit.reset(x);
      local.set(x);
    }
  }

  std::size_t n_;
  const std::vector<Bits>& members_;
  std::size_t best_size_;
};

}  // namespace

std::vector<std::size_t> max_packing(const PackingProblem& p) {
  PackingSearch s(p, false, 0);
  s.run();
  return s.best;
}

std::vector<std::vector<std::size_t>> all_max_packings(const PackingProblem& p, std::size_t cap) {
  PackingSearch s(p, true, cap);
  s.run();
  return s.all;
}

Bits min_hitting_set(std::size_t num_elements, const std::vector<Bits>& members) {
  HittingSearch s(num_elements, members);
  s.run();
  return s.best;
}

}  // namespace dicut::detail
