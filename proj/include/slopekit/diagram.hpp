#pragma once

// Oriented planar link diagrams from PD codes.
//
// PD convention: each crossing is X[a,b,c,d] listing the four incident arcs
// counterclockwise starting at the incoming under-strand arc a (so c is the
// outgoing under-strand arc and b,d carry the over-strand).  O[k] denotes a
// crossing-free closed loop with arc label k.  A crossing is positive when
// the over-strand enters at slot 3, i.e. rotating the over direction
// counterclockwise by a quarter turn gives the under direction.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace slopekit {

struct pd_parse_error : std::runtime_error {
  explicit pd_parse_error(const std::string& w) : std::runtime_error(w) {}
};
struct arc_degree_error : std::runtime_error {
  explicit arc_degree_error(const std::string& w) : std::runtime_error(w) {}
};
struct inconsistent_orientation_error : std::runtime_error {
  explicit inconsistent_orientation_error(const std::string& w) : std::runtime_error(w) {}
};
struct same_component_error : std::runtime_error {
  explicit same_component_error(const std::string& w) : std::runtime_error(w) {}
};

struct Crossing {
  std::array<int, 4> arc;
};

// An arc endpoint: (crossing index, slot).
struct ArcEnd {
  int cr = -1;
  int slot = -1;
  friend bool operator==(const ArcEnd& a, const ArcEnd& b) = default;
  friend auto operator<=>(const ArcEnd& a, const ArcEnd& b) = default;
};

struct ArcInfo {
  ArcEnd head;  // endpoint the arc flows into
  ArcEnd tail;  // endpoint the arc flows out of
  int component = -1;
};

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  std::vector<int> circles;  // crossing-free loops

  // Derived data, filled by derive().
  std::vector<int> signs;                     // per crossing
  std::vector<std::vector<int>> components;   // oriented arc cycles
  std::map<int, ArcInfo> arc_info;            // per arc label

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }

  int component_of(int arc) const {
    auto it = arc_info.find(arc);
    if (it == arc_info.end()) throw std::out_of_range("unknown arc label");
    return it->second.component;
  }

  bool is_circle(int arc) const {
    return std::find(circles.begin(), circles.end(), arc) != circles.end();
  }

  // The arc the strand continues into after flowing through the crossing at
  // this arc's head.
  int successor(int arc) const {
    const ArcEnd& h = arc_info.at(arc).head;
    if (h.cr < 0) return arc;  // circle
    return crossings[h.cr].arc[(h.slot + 2) % 4];
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    auto key = [](const LinkDiagram& d) {
      std::vector<std::array<int, 4>> xs;
      for (const auto& c : d.crossings) xs.push_back(c.arc);
      std::vector<int> os = d.circles;
      std::sort(os.begin(), os.end());
      return std::make_pair(xs, os);
    };
    return key(a) == key(b);
  }
};

namespace detail {

struct ArcOccurrences {
  std::vector<ArcEnd> ends;  // sorted by (cr, slot)
  bool circle = false;
};

inline std::map<int, ArcOccurrences> collect_occurrences(const LinkDiagram& d) {
  std::map<int, ArcOccurrences> occ;
  for (int ci = 0; ci < d.crossing_count(); ++ci)
    for (int s = 0; s < 4; ++s) occ[d.crossings[ci].arc[s]].ends.push_back({ci, s});
  for (int k : d.circles) {
    if (occ.count(k))
      throw arc_degree_error("arc " + std::to_string(k) +
                             " used both as a circle and at a crossing");
    occ[k].circle = true;
  }
  for (auto& [arc, o] : occ) {
    if (!o.circle && o.ends.size() != 2)
      throw arc_degree_error("arc " + std::to_string(arc) + " appears " +
                             std::to_string(o.ends.size()) + " times (want 2)");
    std::sort(o.ends.begin(), o.ends.end());
  }
  return occ;
}

}  // namespace detail

// Recomputes orientations, components and crossing signs from the crossing
// tuples.  Throws arc_degree_error / inconsistent_orientation_error on
// invalid input.
inline void derive(LinkDiagram& d) {
  d.signs.clear();
  d.components.clear();
  d.arc_info.clear();

  auto occ = detail::collect_occurrences(d);

  // Hard direction constraints from under-strand slots: an endpoint at slot 0
  // is a head (arc flows in), at slot 2 a tail.
  auto forced_head = [&](int arc) -> std::optional<ArcEnd> {
    std::optional<ArcEnd> head;
    int heads = 0, tails = 0;
    for (const ArcEnd& e : occ[arc].ends) {
      if (e.slot == 0) {
        ++heads;
        head = e;
      } else if (e.slot == 2) {
        ++tails;
      }
    }
    if (heads > 1 || tails > 1)
      throw inconsistent_orientation_error("arc " + std::to_string(arc) +
                                           " has conflicting under-strand directions");
    if (heads == 1) return head;
    if (tails == 1) {
      const auto& es = occ[arc].ends;
      return es[0].slot == 2 ? es[1] : es[0];
    }
    return std::nullopt;
  };

  std::map<int, bool> visited;
  for (auto& [arc, o] : occ) visited[arc] = false;

  auto other_end = [&](int arc, const ArcEnd& e) {
    const auto& es = occ[arc].ends;
    return es[0] == e ? es[1] : es[0];
  };

  for (auto& [start, o0] : occ) {
    if (visited[start]) continue;
    if (o0.circle) {
      visited[start] = true;
      d.arc_info[start] = ArcInfo{};
      d.arc_info[start].component = static_cast<int>(d.components.size());
      d.components.push_back({start});
      continue;
    }

    // Collect the component's arcs (undirected walk) and look for a forced
    // direction seed.
    std::vector<int> comp_arcs;
    {
      std::set<int> seen;
      std::vector<int> stack = {start};
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        if (!seen.insert(a).second) continue;
        comp_arcs.push_back(a);
        for (const ArcEnd& e : occ[a].ends) {
          int nb = d.crossings[e.cr].arc[(e.slot + 2) % 4];
          if (!seen.count(nb)) stack.push_back(nb);
        }
      }
      std::sort(comp_arcs.begin(), comp_arcs.end());
    }

    int seed = -1;
    ArcEnd seed_head;
    for (int a : comp_arcs) {
      if (auto h = forced_head(a)) {
        seed = a;
        seed_head = *h;
        break;
      }
    }
    if (seed < 0) {
      // No under-passage on this component: orient deterministically from the
      // lowest arc toward its smaller-labelled neighbor.
      seed = comp_arcs.front();
      const auto& es = occ[seed].ends;
      int nb0 = d.crossings[es[0].cr].arc[(es[0].slot + 2) % 4];
      int nb1 = d.crossings[es[1].cr].arc[(es[1].slot + 2) % 4];
      seed_head = (nb0 < nb1 || (nb0 == nb1)) ? es[0] : es[1];
    }

    // Directed walk around the cycle.
    int comp_index = static_cast<int>(d.components.size());
    std::vector<int> cycle;
    int cur = seed;
    ArcEnd cur_head = seed_head;
    do {
      if (visited[cur])
        throw inconsistent_orientation_error("orientation walk revisited arc " +
                                             std::to_string(cur));
      visited[cur] = true;
      ArcInfo info;
      info.head = cur_head;
      info.tail = other_end(cur, cur_head);
      info.component = comp_index;
      d.arc_info[cur] = info;
      cycle.push_back(cur);
      ArcEnd exit{cur_head.cr, (cur_head.slot + 2) % 4};
      int next = d.crossings[exit.cr].arc[exit.slot];
      cur_head = other_end(next, exit);
      cur = next;
    } while (cur != seed);

    // Verify every under-passage on the component agrees with the chosen
    // orientation.
    for (int a : comp_arcs) {
      if (!visited[a])
        throw inconsistent_orientation_error("component walk missed arc " +
                                             std::to_string(a));
      for (const ArcEnd& e : occ[a].ends) {
        if (e.slot == 0 && !(d.arc_info[a].head == e))
          throw inconsistent_orientation_error(
              "no coherent orientation: arc " + std::to_string(a) +
              " cannot flow into slot 0 of crossing " + std::to_string(e.cr));
        if (e.slot == 2 && !(d.arc_info[a].tail == e))
          throw inconsistent_orientation_error(
              "no coherent orientation: arc " + std::to_string(a) +
              " cannot flow out of slot 2 of crossing " + std::to_string(e.cr));
      }
    }

    // Rotate so the lowest arc comes first.
    auto lo = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lo, cycle.end());
    d.components.push_back(std::move(cycle));
  }

  // Components sorted by lowest arc (map iteration found them in that order
  // already except interleaving with circles; enforce it).
  std::sort(d.components.begin(), d.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int ci = 0; ci < static_cast<int>(d.components.size()); ++ci)
    for (int a : d.components[ci]) d.arc_info[a].component = ci;

  // Crossing signs: positive when the over-strand enters at slot 3.
  d.signs.resize(d.crossings.size());
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& x = d.crossings[ci];
    bool in3 = d.arc_info[x.arc[3]].head == ArcEnd{ci, 3};
    bool in1 = d.arc_info[x.arc[1]].head == ArcEnd{ci, 1};
    if (in1 == in3)
      throw inconsistent_orientation_error("over-strand direction unresolved at crossing " +
                                           std::to_string(ci));
    d.signs[ci] = in3 ? +1 : -1;
  }
}

// ---------------------------------------------------------------------------
// Parsing and serialization

// Whitespace-separated `X[a,b,c,d]` and `O[k]` tokens; `%` starts a comment.
inline LinkDiagram parse_pd(const std::string& text) {
  std::string stripped;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      stripped += '\n';
      if (i >= text.size()) break;
    }
    stripped += text[i];
  }

  LinkDiagram d;
  std::istringstream in(stripped);
  std::string tok;
  auto parse_ints = [](const std::string& body, const std::string& tok_text) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : body + ",") {
      if (ch == ',') {
        if (cur.empty()) throw pd_parse_error("empty arc label in " + tok_text);
        for (char c2 : cur)
          if (!std::isdigit(static_cast<unsigned char>(c2)))
            throw pd_parse_error("bad arc label '" + cur + "' in " + tok_text);
        long v = std::strtol(cur.c_str(), nullptr, 10);
        if (v <= 0 || v > 1000000000) throw pd_parse_error("arc label out of range in " + tok_text);
        vals.push_back(static_cast<int>(v));
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    return vals;
  };
  while (in >> tok) {
    if (tok.size() < 3 || tok[1] != '[' || tok.back() != ']')
      throw pd_parse_error("bad token '" + tok + "' (want X[a,b,c,d] or O[k])");
    std::string body = tok.substr(2, tok.size() - 3);
    auto vals = parse_ints(body, tok);
    if (tok[0] == 'X') {
      if (vals.size() != 4) throw pd_parse_error("crossing needs 4 arcs: " + tok);
      d.crossings.push_back({std::array<int, 4>{vals[0], vals[1], vals[2], vals[3]}});
    } else if (tok[0] == 'O') {
      if (vals.size() != 1) throw pd_parse_error("circle needs 1 arc: " + tok);
      d.circles.push_back(vals[0]);
    } else {
      throw pd_parse_error("bad token '" + tok + "' (want X[...] or O[...])");
    }
  }
  if (d.crossings.empty() && d.circles.empty()) throw pd_parse_error("empty PD code");
  derive(d);
  return d;
}

inline std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x.arc[0] << ',' << x.arc[1] << ',' << x.arc[2] << ',' << x.arc[3] << ']';
  }
  for (int k : d.circles) {
    if (!first) os << ' ';
    first = false;
    os << "O[" << k << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Basic invariant-flavored quantities

inline std::vector<int> crossing_signs(const LinkDiagram& d) { return d.signs; }

inline int writhe(const LinkDiagram& d) {
  int w = 0;
  for (int s : d.signs) w += s;
  return w;
}

// Half the signed count of crossings between the two components.
inline int linking_number(const LinkDiagram& d, int c1, int c2) {
  if (c1 == c2) throw same_component_error("linking number needs two distinct components");
  if (c1 < 0 || c2 < 0 || c1 >= d.component_count() || c2 >= d.component_count())
    throw std::out_of_range("component index out of range");
  int sum = 0;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    int cu = d.arc_info.at(d.crossings[ci].arc[0]).component;
    int co = d.arc_info.at(d.crossings[ci].arc[1]).component;
    if ((cu == c1 && co == c2) || (cu == c2 && co == c1)) sum += d.signs[ci];
  }
  return sum / 2;
}

// ---------------------------------------------------------------------------
// Diagram surgeries shared by the Reidemeister moves and twist machinery

// All crossings flipped (over <-> under): the mirror image.  Each tuple is
// rotated to start at the old over-strand's incoming arc.
inline LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram m;
  m.circles = d.circles;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& x = d.crossings[ci];
    int s = d.arc_info.at(x.arc[3]).head == ArcEnd{ci, 3} ? 3 : 1;
    m.crossings.push_back(
        {std::array<int, 4>{x.arc[s], x.arc[(s + 1) % 4], x.arc[(s + 2) % 4], x.arc[(s + 3) % 4]}});
  }
  derive(m);
  return m;
}

// Reverses the orientation of one component by rotating the tuples of the
// crossings where it passes under.  A component with crossings but no
// under-passage cannot be reversed in PD form.
inline LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
  if (comp < 0 || comp >= d.component_count())
    throw std::out_of_range("component index out of range");
  LinkDiagram r;
  r.circles = d.circles;
  bool any_under = false;
  bool any_crossing = false;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const auto& x = d.crossings[ci];
    bool under_here = d.arc_info.at(x.arc[0]).component == comp;
    bool over_here = d.arc_info.at(x.arc[1]).component == comp;
    any_crossing = any_crossing || under_here || over_here;
    if (under_here) {
      any_under = true;
      r.crossings.push_back({std::array<int, 4>{x.arc[2], x.arc[3], x.arc[0], x.arc[1]}});
    } else {
      r.crossings.push_back(x);
    }
  }
  if (any_crossing && !any_under)
    throw inconsistent_orientation_error(
        "cannot reverse a component with no under-passage (R2-stabilize first)");
  derive(r);
  return r;
}

// Deletes a set of crossings, splicing the strands through them.  Arcs whose
// merged class loses every endpoint become circles, except classes containing
// an arc from drop_arcs, which are removed outright.
inline LinkDiagram delete_crossings(const LinkDiagram& d, const std::set<int>& dead,
                                    const std::set<int>& drop_arcs = {}) {
  std::map<int, int> parent;
  for (const auto& [arc, info] : d.arc_info) parent[arc] = arc;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[std::max(find(a), find(b))] = std::min(find(a), find(b)); };

  for (int ci : dead) {
    const auto& x = d.crossings.at(ci);
    unite(x.arc[0], x.arc[2]);
    unite(x.arc[1], x.arc[3]);
  }

  LinkDiagram out;
  std::set<int> live_classes;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    if (dead.count(ci)) continue;
    Crossing x = d.crossings[ci];
    for (int s = 0; s < 4; ++s) {
      x.arc[s] = find(x.arc[s]);
      live_classes.insert(x.arc[s]);
    }
    out.crossings.push_back(x);
  }
  std::set<int> dropped;
  for (int a : drop_arcs) dropped.insert(find(a));
  for (int k : d.circles) {
    int rep = find(k);
    if (!dropped.count(rep)) out.circles.push_back(rep);
  }
  // Classes that lost every crossing endpoint close up into circles.
  std::set<int> emitted;
  for (const auto& [arc, info] : d.arc_info) {
    if (d.is_circle(arc)) continue;
    int rep = find(arc);
    if (live_classes.count(rep) || dropped.count(rep) || emitted.count(rep)) continue;
    emitted.insert(rep);
    out.circles.push_back(rep);
  }
  derive(out);
  return out;
}

}  // namespace slopekit
