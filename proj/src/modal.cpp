#include "gcomonad/modal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "gcomonad/matching.hpp"

namespace gcomonad {

void require_modal_k(int k) {
  if (k < 1) throw StructureError("modal depth k must be >= 1");
}

KripkeView::KripkeView(const Structure& s) : s_(&s), succ_(s.signature().size()) {
  for (std::size_t r = 0; r < s.signature().size(); ++r) {
    const int arity = s.signature()[r].arity;
    if (arity > 2)
      throw StructureError("arity violation: relation " + s.signature()[r].name + " has arity " +
                           std::to_string(arity) + " in a Kripke structure");
    if (arity == 1) {
      props_.push_back(r);
      continue;
    }
    labels_.push_back(r);
    succ_[r].assign(s.size(), {});
    for (const Tuple& t : s.relation(r).tuples()) succ_[r][t[0]].push_back(t[1]);
    for (auto& v : succ_[r]) std::sort(v.begin(), v.end());
  }
}

bool KripkeView::props_equal(Element a, const KripkeView& other, Element b) const {
  for (std::size_t r : props_)
    if (prop(r, a) != other.prop(r, b)) return false;
  return true;
}

bool KripkeView::props_included(Element a, const KripkeView& other, Element b) const {
  for (std::size_t r : props_)
    if (prop(r, a) && !other.prop(r, b)) return false;
  return true;
}

std::vector<Element> reachable_worlds(const KripkeView& v, Element point) {
  std::vector<char> seen(v.size(), 0);
  std::vector<Element> order{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t r : v.labels())
      for (Element w : v.successors(r, order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  return order;
}

ModalUniverse::ModalUniverse(const KripkeView& a, Element point, int k, std::size_t cap) : k_(k) {
  require_modal_k(k);
  nodes_.push_back(Node{npos, 0, point, 0});
  children_.emplace_back();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].depth == k) continue;
    for (std::size_t r : a.labels()) {
      for (Element w : a.successors(r, nodes_[i].world)) {
        if (nodes_.size() >= cap)
          throw CapacityError("modal unfolding exceeds " + std::to_string(cap) + " plays", cap + 1);
        children_[i].push_back(nodes_.size());
        nodes_.push_back(Node{i, r, w, nodes_[i].depth + 1});
        children_.emplace_back();
      }
    }
  }
}

std::optional<std::size_t> ModalUniverse::child(std::size_t i, std::size_t label, Element w) const {
  for (std::size_t c : children_[i])
    if (nodes_[c].label == label && nodes_[c].world == w) return c;
  return std::nullopt;
}

json ModalUniverse::play_json(const Structure& a, std::size_t i) const {
  std::vector<std::size_t> path;
  for (std::size_t c = i; c != npos; c = nodes_[c].parent) path.push_back(c);
  json out = json::array();
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (*it != 0) out.push_back(a.signature()[nodes_[*it].label].name);
    out.push_back(a.name(nodes_[*it].world));
  }
  return out;
}

ModalMaterialized modal_unfold(const PointedStructure& p, int k, std::size_t cap) {
  KripkeView v(p.base);
  ModalUniverse u(v, p.point, k, cap);
  std::vector<std::string> names;
  names.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) names.push_back(u.play_json(p.base, i).dump());
  const Signature& sig = p.base.signature();
  std::vector<Relation> rels;
  for (std::size_t r = 0; r < sig.size(); ++r) rels.emplace_back(sig[r].arity);
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t r : v.props())
      if (v.prop(r, u.node(i).world)) rels[r].insert({static_cast<Element>(i)});
    for (std::size_t c : u.children(i))
      rels[u.node(c).label].insert({static_cast<Element>(i), static_cast<Element>(c)});
  }
  Structure s(sig, std::move(names), std::move(rels));
  return ModalMaterialized{std::move(u), PointedStructure{std::move(s), 0}};
}

std::vector<std::size_t> modal_coextend_table(const ModalUniverse& src, std::span<const Element> f,
                                              const ModalUniverse& target) {
  if (f.size() != src.size()) throw StructureError("coKleisli table does not cover the unfolding");
  if (target.node(0).world != f[0]) throw StructureError("target unfolding is not rooted at f of the point");
  std::vector<std::size_t> out(src.size());
  out[0] = 0;
  // Nodes are in breadth-first order, so parents come first.
  for (std::size_t i = 1; i < src.size(); ++i) {
    const auto& n = src.node(i);
    auto c = target.child(out[n.parent], n.label, f[i]);
    if (!c) throw StructureError("coKleisli map is not a morphism: missing transition in the target");
    out[i] = *c;
  }
  return out;
}

std::vector<Element> modal_counit_table(const ModalUniverse& u) {
  std::vector<Element> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u.node(i).world;
  return out;
}

namespace {

std::vector<std::vector<char>> refine_levels(const Structure& a, const Structure& b, int k, bool two_way) {
  require_modal_k(k);
  require_same_signature(a, b);
  KripkeView va(a), vb(b);
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::vector<char>> levels;
  std::vector<char> cur(na * nb);
  for (Element x = 0; x < na; ++x)
    for (Element y = 0; y < nb; ++y)
      cur[x * nb + y] = two_way ? va.props_equal(x, vb, y) : va.props_included(x, vb, y);
  levels.push_back(cur);
  for (int j = 1; j <= k; ++j) {
    const std::vector<char>& prev = levels.back();
    std::vector<char> next(na * nb, 0);
    for (Element x = 0; x < na; ++x) {
      for (Element y = 0; y < nb; ++y) {
        bool ok = levels.front()[x * nb + y];
        for (std::size_t r : va.labels()) {
          if (!ok) break;
          for (Element x2 : va.successors(r, x)) {
            const auto& ys = vb.successors(r, y);
            if (std::none_of(ys.begin(), ys.end(), [&](Element y2) { return prev[x2 * nb + y2]; })) {
              ok = false;
              break;
            }
          }
          if (!ok || !two_way) continue;
          for (Element y2 : vb.successors(r, y)) {
            const auto& xs = va.successors(r, x);
            if (std::none_of(xs.begin(), xs.end(), [&](Element x2) { return prev[x2 * nb + y2]; })) {
              ok = false;
              break;
            }
          }
        }
        next[x * nb + y] = ok;
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

std::vector<std::vector<char>> simulation_levels(const Structure& a, const Structure& b, int k) {
  return refine_levels(a, b, k, false);
}

std::vector<std::vector<char>> bisim_levels(const Structure& a, const Structure& b, int k) {
  return refine_levels(a, b, k, true);
}

bool simulation_approx(const PointedStructure& p, const PointedStructure& q, int k) {
  return simulation_levels(p.base, q.base, k)[k][p.point * q.base.size() + q.point];
}

bool bisim_approx(const PointedStructure& p, const PointedStructure& q, int k) {
  return bisim_levels(p.base, q.base, k)[k][p.point * q.base.size() + q.point];
}

std::vector<int> graded_classes(const Structure& a, const Structure& b, int k) {
  require_modal_k(k);
  require_same_signature(a, b);
  KripkeView va(a), vb(b);
  const std::size_t na = a.size(), n = na + b.size();
  auto view = [&](std::size_t w) -> std::pair<const KripkeView*, Element> {
    return w < na ? std::pair{&va, static_cast<Element>(w)} : std::pair{&vb, static_cast<Element>(w - na)};
  };
  std::vector<std::vector<int>> props(n);
  for (std::size_t w = 0; w < n; ++w) {
    auto [v, x] = view(w);
    for (std::size_t r : va.props()) props[w].push_back(v->prop(r, x));
  }
  auto relabel = [&](const std::vector<std::vector<int>>& sigs) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> out(n);
    for (std::size_t w = 0; w < n; ++w) out[w] = ids.emplace(sigs[w], static_cast<int>(ids.size())).first->second;
    return out;
  };
  std::vector<int> cls = relabel(props);
  for (int j = 1; j <= k; ++j) {
    std::vector<std::vector<int>> sigs = props;
    for (std::size_t w = 0; w < n; ++w) {
      auto [v, x] = view(w);
      for (std::size_t r : va.labels()) {
        std::vector<int> ms;
        const std::size_t off = w < na ? 0 : na;
        for (Element y : v->successors(r, x)) ms.push_back(cls[off + y]);
        std::sort(ms.begin(), ms.end());
        sigs[w].push_back(-1);  // separator between labels
        sigs[w].insert(sigs[w].end(), ms.begin(), ms.end());
      }
    }
    cls = relabel(sigs);
  }
  return cls;
}

bool graded_bisim_approx(const PointedStructure& p, const PointedStructure& q, int k) {
  auto cls = graded_classes(p.base, q.base, k);
  return cls[p.point] == cls[p.base.size() + q.point];
}

ModalArena::ModalArena(const PointedStructure& p, const PointedStructure& q, int k, Mode mode)
    : p_(p), q_(q), va_(p.base), vb_(q.base), k_(k), mode_(mode) {
  require_modal_k(k);
  require_same_signature(p.base, q.base);
}

bool ModalArena::matches(Element a, Element b) const {
  return mode_ == Mode::simulation ? va_.props_included(a, vb_, b) : va_.props_equal(a, vb_, b);
}

std::optional<ModalArena::Position> ModalArena::root() const {
  if (!matches(p_.point, q_.point)) return std::nullopt;
  return Position{p_.point, q_.point, 0};
}

std::vector<Side> ModalArena::sides() const {
  if (mode_ == Mode::simulation) return {Side::left};
  return {Side::left, Side::right};
}

std::vector<Step> ModalArena::moves(const Position& p, Side s) const {
  std::vector<Step> out;
  if (p.depth >= k_) return out;
  const KripkeView& v = s == Side::left ? va_ : vb_;
  const Element w = s == Side::left ? p.a : p.b;
  for (std::size_t r : v.labels())
    for (Element x : v.successors(r, w)) out.push_back(Step{r, x});
  return out;
}

std::vector<Step> ModalArena::replies(const Position& p, Side s, const Step& mv) const {
  std::vector<Step> out;
  const KripkeView& v = s == Side::left ? vb_ : va_;
  const Element w = s == Side::left ? p.b : p.a;
  for (Element x : v.successors(mv.label, w)) out.push_back(Step{mv.label, x});
  return out;
}

std::optional<ModalArena::Position> ModalArena::advance(const Position& p, Side s, const Step& mv,
                                                        const Step& reply) const {
  if (mv.label != reply.label) return std::nullopt;
  Position next{s == Side::left ? mv.elem : reply.elem, s == Side::left ? reply.elem : mv.elem, p.depth + 1};
  if (!matches(next.a, next.b)) return std::nullopt;
  return next;
}

json ModalArena::describe(const Position& p) const {
  return {{"pair", {p_.base.name(p.a), q_.base.name(p.b)}}, {"round", p.depth}};
}

json ModalArena::describe_step(Side s, const Step& st) const {
  const Structure& str = s == Side::left ? p_.base : q_.base;
  return {str.signature()[st.label].name, str.name(st.elem)};
}

namespace {

class GradedSolver {
 public:
  GradedSolver(const PointedStructure& p, const PointedStructure& q, int k)
      : p_(p), q_(q), va_(p.base), vb_(q.base), k_(k) {}

  bool wins(Element a, Element b, int d) {
    const std::size_t key = (static_cast<std::size_t>(d) * p_.base.size() + a) * q_.base.size() + b;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = va_.props_equal(a, vb_, b);
    for (std::size_t r : va_.labels()) {
      if (!ok || d >= k_) break;
      ok = bijection(a, b, d, r).has_value();
    }
    memo_[key] = ok;
    return ok;
  }

  std::optional<std::vector<std::pair<Element, Element>>> bijection(Element a, Element b, int d, std::size_t r) {
    const auto& xs = va_.successors(r, a);
    const auto& ys = vb_.successors(r, b);
    if (xs.size() != ys.size()) return std::nullopt;
    std::vector<std::vector<char>> adj(xs.size(), std::vector<char>(ys.size(), 0));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) adj[i][j] = wins(xs[i], ys[j], d + 1);
    auto m = perfect_matching(adj);
    if (!m) return std::nullopt;
    std::vector<std::pair<Element, Element>> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], ys[(*m)[i]]);
    return out;
  }

  json certificate() {
    json rounds = json::array();
    std::deque<std::tuple<Element, Element, int>> queue{{p_.point, q_.point, 0}};
    std::unordered_map<std::size_t, bool> seen;
    while (!queue.empty()) {
      auto [a, b, d] = queue.front();
      queue.pop_front();
      if (d >= k_) continue;
      for (std::size_t r : va_.labels()) {
        auto bij = bijection(a, b, d, r);
        json pairs = json::array();
        for (auto [x, y] : *bij) {
          pairs.push_back({p_.base.name(x), q_.base.name(y)});
          const std::size_t key = (static_cast<std::size_t>(d + 1) * p_.base.size() + x) * q_.base.size() + y;
          if (seen.emplace(key, true).second) queue.emplace_back(x, y, d + 1);
        }
        rounds.push_back({{"position", {p_.base.name(a), q_.base.name(b)}},
                          {"round", d},
                          {"label", p_.base.signature()[r].name},
                          {"bijection", std::move(pairs)}});
      }
    }
    return rounds;
  }

 private:
  const PointedStructure& p_;
  const PointedStructure& q_;
  KripkeView va_, vb_;
  int k_;
  std::unordered_map<std::size_t, bool> memo_;
};

}  // namespace

GradedGameResult graded_bisim_game(const PointedStructure& p, const PointedStructure& q, int k) {
  require_modal_k(k);
  require_same_signature(p.base, q.base);
  GradedSolver solver(p, q, k);
  GradedGameResult res;
  res.certificate = nullptr;
  res.duplicator_wins = solver.wins(p.point, q.point, 0);
  if (res.duplicator_wins)
    res.certificate = {{"kind", "modal-graded"}, {"k", k}, {"rounds", solver.certificate()}};
  return res;
}

std::optional<std::string> verify_graded_certificate(const PointedStructure& p, const PointedStructure& q, int k,
                                                     const json& cert) {
  require_modal_k(k);
  require_same_signature(p.base, q.base);
  if (!cert.is_object() || !cert.contains("rounds") || !cert["rounds"].is_array())
    return "certificate has no rounds array";
  KripkeView va(p.base), vb(q.base);
  std::map<std::string, json> table;
  for (const auto& e : cert["rounds"]) {
    if (!e.is_object() || !e.contains("position") || !e.contains("round") || !e.contains("label") ||
        !e.contains("bijection"))
      return "malformed round entry";
    table[json{e["position"], e["round"], e["label"]}.dump()] = e["bijection"];
  }
  if (!va.props_equal(p.point, vb, q.point)) return "points disagree on propositions";
  std::deque<std::tuple<Element, Element, int>> queue{{p.point, q.point, 0}};
  std::map<std::tuple<Element, Element, int>, bool> seen;
  while (!queue.empty()) {
    auto [a, b, d] = queue.front();
    queue.pop_front();
    if (d >= k) continue;
    const json pos = {p.base.name(a), q.base.name(b)};
    for (std::size_t r : va.labels()) {
      const std::string& label = p.base.signature()[r].name;
      auto it = table.find(json{pos, d, label}.dump());
      if (it == table.end()) return "no bijection at " + pos.dump() + " round " + std::to_string(d) + " for " + label;
      const auto& xs = va.successors(r, a);
      const auto& ys = vb.successors(r, b);
      if (!it->second.is_array() || it->second.size() != xs.size() || xs.size() != ys.size())
        return "bijection at " + pos.dump() + " has the wrong size";
      std::vector<char> used_x(p.base.size(), 0), used_y(q.base.size(), 0);
      for (const auto& pr : it->second) {
        if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
          return "malformed bijection pair";
        auto x = p.base.find(pr[0].get<std::string>());
        auto y = q.base.find(pr[1].get<std::string>());
        if (!x || !y || !std::binary_search(xs.begin(), xs.end(), *x) || !std::binary_search(ys.begin(), ys.end(), *y))
          return "bijection pair " + pr.dump() + " is not a pair of successors";
        if (used_x[*x]++ || used_y[*y]++) return "bijection at " + pos.dump() + " is not injective";
        if (!va.props_equal(*x, vb, *y)) return "pair " + pr.dump() + " disagrees on propositions";
        if (!seen[{*x, *y, d + 1}]) {
          seen[{*x, *y, d + 1}] = true;
          queue.emplace_back(*x, *y, d + 1);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<int> modal_depth(const PointedStructure& p) {
  KripkeView v(p.base);
  const std::vector<Element> worlds = reachable_worlds(v, p.point);
  std::vector<int> indeg(p.base.size(), 0), depth(p.base.size(), 0);
  for (Element w : worlds)
    for (std::size_t r : v.labels())
      for (Element x : v.successors(r, w)) ++indeg[x];
  if (indeg[p.point] != 0) return std::nullopt;
  for (Element w : worlds)
    if (w != p.point && indeg[w] != 1) return std::nullopt;
  // With in-degree one everywhere, the breadth-first order visits parents first.
  int height = 0;
  for (Element w : worlds)
    for (std::size_t r : v.labels())
      for (Element x : v.successors(r, w)) {
        depth[x] = depth[w] + 1;
        height = std::max(height, depth[x]);
      }
  return height;
}

}  // namespace gcomonad
