#include "gcomonad/homomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gcomonad {

bool is_homomorphism(std::span<const Element> h, const Structure& a, const Structure& b) {
  require_same_signature(a, b);
  if (h.size() != a.size()) throw StructureError("map is not total on the source universe");
  for (Element v : h)
    if (v >= b.size()) throw StructureError("map value outside the target universe");
  Tuple img;
  for (std::size_t r = 0; r < a.relations().size(); ++r) {
    for (const auto& t : a.relation(r).tuples()) {
      img.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = h[t[i]];
      if (!b.holds(r, img)) return false;
    }
  }
  return true;
}

namespace {

constexpr Element kUnassigned = static_cast<Element>(-1);

struct Constraint {
  std::size_t rel;
  const Tuple* tuple;
};

class HomSearch {
 public:
  HomSearch(const Structure& a, const Structure& b, const HomSearchOptions& opts)
      : a_(a), b_(b), n_(a.size()), m_(b.size()) {
    for (std::size_t r = 0; r < a.relations().size(); ++r)
      for (const auto& t : a.relation(r).tuples()) constraints_.push_back({r, &t});
    watch_.resize(n_);
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      Tuple vars = *constraints_[c].tuple;
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (Element v : vars) watch_[v].push_back(c);
    }
    domain_.assign(n_, std::vector<char>(m_, 1));
    domain_size_.assign(n_, m_);
    assignment_.assign(n_, kUnassigned);

    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), Element{0});
    if (opts.shuffle_seed) {
      std::mt19937_64 rng(*opts.shuffle_seed);
      for (std::size_t i = m_; i > 1; --i) std::swap(order_[i - 1], order_[rng() % i]);
    }
    fixed_ = opts.fixed;
  }

  std::optional<TotalMap> run() {
    if (m_ == 0) return std::nullopt;
    // Node consistency for constraints whose only variable is repeated.
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      if (!propagate(c)) return std::nullopt;
    }
    for (const auto& [v, val] : fixed_) {
      if (v >= n_ || val >= m_) throw StructureError("fixed pair outside universe");
      if (assignment_[v] != kUnassigned) {
        if (assignment_[v] != val) return std::nullopt;
        continue;
      }
      if (!domain_[v][val] || !assign(v, val)) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    return assignment_;
  }

 private:
  struct Removal {
    Element var;
    Element val;
  };

  bool remove_value(Element v, Element val) {
    if (!domain_[v][val]) return true;
    domain_[v][val] = 0;
    trail_.push_back({v, val});
    return --domain_size_[v] > 0;
  }

  // Checks or prunes constraint c given current assignments.
  bool propagate(std::size_t c) {
    const Tuple& t = *constraints_[c].tuple;
    const std::size_t rel = constraints_[c].rel;
    Element free_var = kUnassigned;
    for (Element v : t) {
      if (assignment_[v] != kUnassigned) continue;
      if (free_var == kUnassigned) {
        free_var = v;
      } else if (free_var != v) {
        return true;  // two distinct free variables: nothing to prune yet
      }
    }
    scratch_.resize(t.size());
    if (free_var == kUnassigned) {
      for (std::size_t i = 0; i < t.size(); ++i) scratch_[i] = assignment_[t[i]];
      return b_.holds(rel, scratch_);
    }
    for (Element val = 0; val < m_; ++val) {
      if (!domain_[free_var][val]) continue;
      for (std::size_t i = 0; i < t.size(); ++i) scratch_[i] = t[i] == free_var ? val : assignment_[t[i]];
      if (!b_.holds(rel, scratch_) && !remove_value(free_var, val)) return false;
    }
    return true;
  }

  bool assign(Element v, Element val) {
    assignment_[v] = val;
    for (std::size_t c : watch_[v])
      if (!propagate(c)) return false;
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, val] = trail_.back();
      trail_.pop_back();
      domain_[v][val] = 1;
      ++domain_size_[v];
    }
  }

  // Iterative depth-first search; materialized universes can be large.
  bool search() {
    struct Frame {
      Element var;
      std::size_t next;
      std::size_t mark;
    };
    auto next_var = [&](Element v) {
      while (v < n_ && assignment_[v] != kUnassigned) ++v;
      return v;
    };
    const Element first = next_var(0);
    if (first == n_) return true;
    std::vector<Frame> stack{{first, 0, trail_.size()}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (assignment_[f.var] != kUnassigned) {
        assignment_[f.var] = kUnassigned;
        undo_to(f.mark);
      }
      bool advanced = false;
      while (f.next < m_) {
        const Element val = order_[f.next++];
        if (!domain_[f.var][val]) continue;
        if (assign(f.var, val)) {
          advanced = true;
          break;
        }
        assignment_[f.var] = kUnassigned;
        undo_to(f.mark);
      }
      if (!advanced) {
        stack.pop_back();
        continue;
      }
      const Element w = next_var(f.var + 1);
      if (w == n_) return true;
      stack.push_back({w, 0, trail_.size()});
    }
    return false;
  }

  const Structure& a_;
  const Structure& b_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<std::vector<char>> domain_;
  std::vector<std::size_t> domain_size_;
  std::vector<Element> assignment_;
  std::vector<Element> order_;
  std::vector<std::pair<Element, Element>> fixed_;
  std::vector<Removal> trail_;
  Tuple scratch_;
};

}  // namespace

std::optional<TotalMap> find_homomorphism(const Structure& a, const Structure& b, const HomSearchOptions& opts) {
  require_same_signature(a, b);
  return HomSearch(a, b, opts).run();
}

std::optional<TotalMap> find_pointed_homomorphism(const PointedStructure& a, const PointedStructure& b) {
  HomSearchOptions opts;
  opts.fixed.emplace_back(a.point, b.point);
  return find_homomorphism(a.base, b.base, opts);
}

}  // namespace gcomonad
