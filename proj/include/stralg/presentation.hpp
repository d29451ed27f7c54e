// Quiver presentations with monomial relations: the algebra DSL parser, the
// string-algebra axiom checker, and the quotient-by-arrows construction.
//
// Conventions fixed once and for all: paths compose right to left (in the
// path "d g" one walks g first, then d), and relations are stored in that
// written order, leftmost token acting last.

#ifndef STRALG_PRESENTATION_HPP_
#define STRALG_PRESENTATION_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stralg {

struct Vertex {
  std::string id;
  friend bool operator==(Vertex const& a, Vertex const& b) { return a.id == b.id; }
  friend auto operator<=>(Vertex const& a, Vertex const& b) { return a.id <=> b.id; }
};

struct Arrow {
  std::string name;
  std::string source;
  std::string target;
  friend bool operator==(Arrow const&, Arrow const&) = default;
};

// A composable path of arrow names in written (right-to-left composition)
// order: tokens[k-1] acts first.
using RelationPath = std::vector<std::string>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  std::size_t line, column;
};

struct AxiomViolation {
  std::string axiom;    // short tag, e.g. "too-many-ingoing"
  std::string detail;   // offending vertex / arrow pair
};

class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  AlgebraPresentation(std::string name, std::vector<Vertex> vertices,
                      std::vector<Arrow> arrows,
                      std::vector<RelationPath> relations)
      : name_(std::move(name)),
        vertices_(std::move(vertices)),
        arrows_(std::move(arrows)),
        relations_(std::move(relations)) {
    check_well_formed();
    normalize();
  }

  std::string const& name() const { return name_; }
  std::vector<Vertex> const& vertices() const { return vertices_; }
  std::vector<Arrow> const& arrows() const { return arrows_; }
  std::vector<RelationPath> const& relations() const { return relations_; }
  bool validated() const { return validated_; }

  bool has_vertex(std::string const& id) const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [&](Vertex const& v) { return v.id == id; });
  }

  Arrow const* find_arrow(std::string const& name) const {
    for (auto const& a : arrows_)
      if (a.name == name) return &a;
    return nullptr;
  }

  Arrow const& arrow(std::string const& name) const {
    Arrow const* a = find_arrow(name);
    if (a == nullptr) throw std::invalid_argument("unknown arrow: " + name);
    return *a;
  }

  // Whether the length-2 path "second after first" is nonzero in the algebra.
  // With relations normalized this is just the literal length-2 relations.
  bool composition_nonzero(std::string const& first,
                           std::string const& second) const {
    if (arrow(second).source != arrow(first).target) return false;
    for (auto const& r : relations_)
      if (r.size() == 2 && r[0] == second && r[1] == first) return false;
    return true;
  }

  bool is_relation_path(std::vector<std::string> const& tokens) const {
    return std::find(relations_.begin(), relations_.end(), tokens) !=
           relations_.end();
  }

  std::size_t max_relation_length() const {
    std::size_t m = 2;
    for (auto const& r : relations_) m = std::max(m, r.size());
    return m;
  }

  // String-algebra axiom audit.  Empty result means the presentation passed;
  // the validated flag is set as a side effect of validate_string_algebra.
  friend std::vector<AxiomViolation> validate_string_algebra(
      AlgebraPresentation& A);

  std::string to_dsl() const {
    std::ostringstream os;
    os << "algebra " << (name_.empty() ? std::string("unnamed") : name_) << "\n";
    os << "vertices:";
    for (auto const& v : vertices_) os << " " << v.id;
    os << "\n";
    for (auto const& a : arrows_)
      os << "arrow " << a.name << ": " << a.source << " -> " << a.target << "\n";
    for (auto const& r : relations_) {
      os << "relation:";
      for (auto const& t : r) os << " " << t;
      os << "\n";
    }
    return os.str();
  }

  friend bool operator==(AlgebraPresentation const& a,
                         AlgebraPresentation const& b) {
    return a.name_ == b.name_ && a.vertices_ == b.vertices_ &&
           a.arrows_ == b.arrows_ && a.relations_ == b.relations_;
  }

 private:
  void check_well_formed() {
    std::set<std::string> vids;
    for (auto const& v : vertices_)
      if (!vids.insert(v.id).second)
        throw std::invalid_argument("duplicate vertex id: " + v.id);
    std::set<std::string> anames;
    for (auto const& a : arrows_) {
      if (!anames.insert(a.name).second)
        throw std::invalid_argument("duplicate arrow name: " + a.name);
      if (!has_vertex(a.source))
        throw std::invalid_argument("dangling vertex reference: " + a.source);
      if (!has_vertex(a.target))
        throw std::invalid_argument("dangling vertex reference: " + a.target);
    }
    for (auto const& r : relations_) {
      if (r.size() < 2)
        throw std::invalid_argument(
            "relations must be paths of length >= 2 (kill an arrow via a "
            "quotient instead)");
      for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        // composition right-to-left: source of the left factor r[i] must be
        // the target of the right factor r[i+1]
        if (arrow(r[i]).source != arrow(r[i + 1]).target)
          throw std::invalid_argument("non-composable relation path at " +
                                      r[i + 1] + " " + r[i]);
      }
    }
  }

  // Drop relations containing another relation as a (contiguous) subpath and
  // deduplicate; sort for determinism.
  void normalize() {
    std::vector<RelationPath> keep;
    for (auto const& r : relations_) {
      bool redundant = false;
      for (auto const& s : relations_) {
        if (s.size() >= r.size() && (s.size() > r.size() || !(s == r))) continue;
        if (s == r) continue;
        for (std::size_t off = 0; off + s.size() <= r.size(); ++off)
          if (std::equal(s.begin(), s.end(), r.begin() + off)) {
            redundant = true;
            break;
          }
        if (redundant) break;
      }
      if (!redundant && std::find(keep.begin(), keep.end(), r) == keep.end())
        keep.push_back(r);
    }
    std::sort(keep.begin(), keep.end());
    relations_ = std::move(keep);
  }

  std::string name_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<RelationPath> relations_;
  bool validated_ = false;
};

inline std::vector<AxiomViolation> validate_string_algebra(
    AlgebraPresentation& A) {
  std::vector<AxiomViolation> out;
  for (auto const& v : A.vertices_) {
    std::vector<std::string> in, outgoing;
    for (auto const& a : A.arrows_) {
      if (a.target == v.id) in.push_back(a.name);
      if (a.source == v.id) outgoing.push_back(a.name);
    }
    if (in.size() > 2)
      out.push_back({"too-many-ingoing", "vertex " + v.id});
    if (outgoing.size() > 2)
      out.push_back({"too-many-outgoing", "vertex " + v.id});
  }
  // Unique nonzero composition, both ways.
  for (auto const& b : A.arrows_) {
    std::vector<std::string> nonzero_right;  // ingoing a at source(b) with ba != 0
    for (auto const& a : A.arrows_)
      if (a.target == b.source && A.composition_nonzero(a.name, b.name))
        nonzero_right.push_back(a.name);
    if (nonzero_right.size() > 1)
      out.push_back({"double-nonzero-composition",
                     "arrow " + b.name + " composes nonzero with " +
                         nonzero_right[0] + " and " + nonzero_right[1]});
  }
  for (auto const& a : A.arrows_) {
    std::vector<std::string> nonzero_left;  // outgoing b at target(a) with ba != 0
    for (auto const& b : A.arrows_)
      if (b.source == a.target && A.composition_nonzero(a.name, b.name))
        nonzero_left.push_back(b.name);
    if (nonzero_left.size() > 1)
      out.push_back({"double-nonzero-composition",
                     "arrow " + a.name + " composes nonzero under " +
                         nonzero_left[0] + " and " + nonzero_left[1]});
  }
  // Boundedness: the ideal must be admissible, i.e. no arrow cycle avoiding
  // every relation (otherwise the algebra is infinite dimensional).  States
  // are (last arrow, progress into some relation read right-to-left).
  {
    struct State {
      std::string last;
      std::vector<std::string> walk;  // arrows walked so far, oldest first
    };
    // For small presentations a plain DFS over nonzero paths with a length
    // cap of (#arrows * max relation length + 1) detects unbounded paths:
    // any nonzero path longer than that revisits an arrow with the same
    // relation progress window.
    std::size_t window = A.max_relation_length() - 1;
    std::size_t cap = A.arrows_.size() * (window == 0 ? 1 : window) + 1;
    auto path_nonzero = [&](std::vector<std::string> const& walk) {
      // walk is in walking order: walk[0] first; relations are written with
      // the first-acting arrow last, so reverse before factor comparison.
      for (auto const& r : A.relations_) {
        if (r.size() > walk.size()) continue;
        for (std::size_t off = 0; off + r.size() <= walk.size(); ++off) {
          bool hit = true;
          for (std::size_t i = 0; i < r.size(); ++i)
            if (walk[off + i] != r[r.size() - 1 - i]) {
              hit = false;
              break;
            }
          if (hit) return false;
        }
      }
      return true;
    };
    bool unbounded = false;
    std::string witness;
    std::vector<std::string> stack;
    auto dfs = [&](auto&& self, std::string const& at) -> void {
      if (unbounded) return;
      if (stack.size() > cap) {
        unbounded = true;
        std::ostringstream os;
        for (auto const& s : stack) os << s << " ";
        witness = os.str();
        return;
      }
      for (auto const& a : A.arrows_) {
        if (a.source != at) continue;
        stack.push_back(a.name);
        if (path_nonzero(stack)) self(self, a.target);
        stack.pop_back();
        if (unbounded) return;
      }
    };
    for (auto const& v : A.vertices_) {
      stack.clear();
      dfs(dfs, v.id);
      if (unbounded) break;
    }
    if (unbounded)
      out.push_back({"unbounded-path",
                     "arrow cycle avoiding all relations: " + witness});
  }
  A.validated_ = out.empty();
  return out;
}

inline AlgebraPresentation quotient_by_arrows(AlgebraPresentation const& A,
                                              std::set<std::string> const& kill) {
  for (auto const& k : kill) A.arrow(k);  // throws on unknown names
  std::vector<Arrow> arrows;
  for (auto const& a : A.arrows())
    if (!kill.count(a.name)) arrows.push_back(a);
  std::vector<RelationPath> relations;
  for (auto const& r : A.relations()) {
    bool keeps = std::none_of(r.begin(), r.end(), [&](std::string const& t) {
      return kill.count(t) != 0;
    });
    if (keeps) relations.push_back(r);
  }
  return AlgebraPresentation(A.name(), A.vertices(), std::move(arrows),
                             std::move(relations));
}

// ---------------------------------------------------------------------------
// Algebra DSL
//
//   algebra <name>
//   vertices: v1 v2 ...
//   arrow <name>: <source> -> <target>
//   relation: <arrowN> ... <arrow1>     # composition right-to-left
//
// '#' starts a comment; blank lines are ignored.

inline AlgebraPresentation parse_algebra(std::string const& text) {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;
  std::vector<RelationPath> relations;
  bool saw_algebra = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](std::size_t col, std::string const& msg) -> void {
    throw ParseError(lineno, col, msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "algebra") {
      if (!(ls >> name)) fail(line.find(head) + 1, "expected algebra name");
      saw_algebra = true;
    } else if (head == "vertices:") {
      std::string v;
      while (ls >> v) vertices.push_back({v});
    } else if (head == "arrow") {
      std::string nm, src, arr, tgt;
      if (!(ls >> nm)) fail(1, "expected arrow name");
      if (nm.back() != ':') fail(1, "expected ':' after arrow name");
      nm.pop_back();
      if (!(ls >> src >> arr >> tgt) || arr != "->")
        fail(1, "expected '<source> -> <target>'");
      arrows.push_back({nm, src, tgt});
    } else if (head == "relation:") {
      RelationPath r;
      std::string t;
      while (ls >> t) r.push_back(t);
      if (r.empty()) fail(1, "empty relation");
      relations.push_back(std::move(r));
    } else {
      fail(line.find(head) + 1, "unknown directive '" + head + "'");
    }
  }
  if (!saw_algebra && vertices.empty() && arrows.empty())
    throw ParseError(1, 1, "empty algebra source");
  try {
    return AlgebraPresentation(name, std::move(vertices), std::move(arrows),
                               std::move(relations));
  } catch (std::invalid_argument const& e) {
    throw ParseError(lineno, 1, e.what());
  }
}

}  // namespace stralg

#endif
