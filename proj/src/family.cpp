#include "mpc/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mpc/graph_io.hpp"
#include "mpc/matching.hpp"
#include "mpc/path_cover.hpp"

namespace mpc {

namespace {

ParseError ParseErrorAt(int lineno, const std::string& what) {
  return ParseError("labeled tree: " + what + " at line " + std::to_string(lineno));
}

std::string ahu_labeled(const Graph& t, int root, const std::vector<Status>& status) {
  RootedTree rt = root_tree(t, root);
  std::vector<int> order{root};
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : rt.children[order[i]]) order.push_back(c);
  std::vector<std::string> code(t.order());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<std::string> parts;
    for (int c : rt.children[v]) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    s += to_char(status[v]);
    for (auto& p : parts) s += p;
    s += ")";
    code[v] = std::move(s);
  }
  return code[root];
}

void check_labeled(const LabeledTree& lt) {
  if (!is_tree(lt.tree)) throw std::invalid_argument("labeled tree: underlying graph is not a tree");
  if (static_cast<int>(lt.status.size()) != lt.tree.order())
    throw std::invalid_argument("labeled tree: one status per vertex required");
}

}  // namespace

char to_char(Status s) { return static_cast<char>(s); }

Status status_from_char(char c) {
  if (c != 'A' && c != 'B' && c != 'C') throw std::invalid_argument(std::string("unknown status '") + c + "'");
  return static_cast<Status>(c);
}

std::string_view name_of(BuildOp op) {
  switch (op) {
    case BuildOp::AddLeaf: return "add-leaf";
    case BuildOp::GrowPair: return "grow-pair";
    case BuildOp::AttachP3: return "attach-p3";
    case BuildOp::AttachP5: return "attach-p5";
  }
  throw std::logic_error("unreachable");
}

int added_count(BuildOp op) {
  switch (op) {
    case BuildOp::AddLeaf: return 1;
    case BuildOp::GrowPair: return 2;
    case BuildOp::AttachP3: return 3;
    case BuildOp::AttachP5: return 5;
  }
  throw std::logic_error("unreachable");
}

LabeledTree seed_p3() {
  return LabeledTree{Graph(3, {{0, 1}, {1, 2}}), {Status::B, Status::A, Status::B}};
}

LabeledTree apply_operation(const LabeledTree& lt, const BuildStep& step) {
  check_labeled(lt);
  int n = lt.tree.order();
  int a = step.attacher;
  if (a < 0 || a >= n) throw std::invalid_argument("attacher out of range");
  int k = added_count(step.op);
  if (static_cast<int>(step.new_vertices.size()) != k)
    throw std::invalid_argument(std::string(name_of(step.op)) + " adds exactly " + std::to_string(k) +
                                " vertices");
  for (int i = 0; i < k; ++i)
    if (step.new_vertices[i] != n + i)
      throw std::invalid_argument("new vertices must be the next free indices in path order");

  Status sa = lt.status[a];
  auto require_status = [&](Status want) {
    if (sa != want)
      throw std::invalid_argument(std::string(name_of(step.op)) + " requires an attacher of status " +
                                  to_char(want) + ", vertex " + std::to_string(a) + " has status " +
                                  to_char(sa));
  };

  std::vector<Edge> edges(lt.tree.edges());
  std::vector<Status> status(lt.status);
  status.resize(n + k, Status::B);
  switch (step.op) {
    case BuildOp::AddLeaf:
      require_status(Status::A);
      edges.emplace_back(a, n);
      status[n] = Status::B;
      break;
    case BuildOp::GrowPair:
      require_status(Status::B);
      edges.emplace_back(a, n);
      edges.emplace_back(n, n + 1);
      status[a] = Status::C;
      status[n] = Status::A;
      status[n + 1] = Status::B;
      break;
    case BuildOp::AttachP3:
      edges.emplace_back(n, n + 1);
      edges.emplace_back(n + 1, n + 2);
      edges.emplace_back(a, n + 1);
      if (sa == Status::B) status[a] = Status::C;
      status[n] = Status::B;
      status[n + 1] = Status::A;
      status[n + 2] = Status::B;
      break;
    case BuildOp::AttachP5:
      require_status(Status::A);
      for (int i = 0; i + 1 < 5; ++i) edges.emplace_back(n + i, n + i + 1);
      edges.emplace_back(a, n + 2);
      status[n] = Status::B;
      status[n + 1] = Status::A;
      status[n + 2] = Status::C;
      status[n + 3] = Status::A;
      status[n + 4] = Status::B;
      break;
  }
  return LabeledTree{Graph(n + k, edges), std::move(status)};
}

CanonicalForm labeled_canonical_form(const LabeledTree& lt) {
  check_labeled(lt);
  auto centers = tree_centers(lt.tree);
  std::string best = ahu_labeled(lt.tree, centers[0], lt.status);
  if (centers.size() == 2) best = std::min(best, ahu_labeled(lt.tree, centers[1], lt.status));
  return CanonicalForm{std::move(best)};
}

FamilyEnumeration enumerate_family(int max_n, int cap) {
  if (max_n < 3) throw std::invalid_argument("family members have at least 3 vertices");
  if (max_n > cap) throw CapExceeded("family enumeration capped at " + std::to_string(cap) + " vertices");
  FamilyEnumeration out;
  auto admit = [&](const LabeledTree& lt) {
    if (out.labeled_codes.insert(labeled_canonical_form(lt).code).second) {
      out.underlying_codes.insert(canonical_form(lt.tree).code);
      out.members.push_back(lt);
      return true;
    }
    return false;
  };
  admit(seed_p3());
  constexpr BuildOp kOps[] = {BuildOp::AddLeaf, BuildOp::GrowPair, BuildOp::AttachP3, BuildOp::AttachP5};
  for (size_t i = 0; i < out.members.size(); ++i)
    for (BuildOp op : kOps) {
      int sz = out.members[i].tree.order();
      if (sz + added_count(op) > max_n) continue;
      for (int a = 0; a < sz; ++a) {
        Status sa = out.members[i].status[a];
        if (op == BuildOp::GrowPair && sa != Status::B) continue;
        if ((op == BuildOp::AddLeaf || op == BuildOp::AttachP5) && sa != Status::A) continue;
        BuildStep step{op, a, {}};
        for (int j = 0; j < added_count(op); ++j) step.new_vertices.push_back(sz + j);
        admit(apply_operation(out.members[i], step));
      }
    }
  return out;
}

VerificationReport check_structure(const LabeledTree& lt) {
  check_labeled(lt);
  const Graph& t = lt.tree;
  auto is_leaf = [&](int v) { return t.degree(v) == 1; };
  auto is_support = [&](int v) {
    for (int u : t.neighbors(v))
      if (is_leaf(u)) return true;
    return false;
  };
  ClaimCheck a{"supports-are-A", true, ""};
  ClaimCheck b{"leaves-are-exactly-B", true, ""};
  ClaimCheck c{"A-has-two-BC-neighbors", true, ""};
  ClaimCheck d{"C-sees-only-A", true, ""};
  for (int v = 0; v < t.order(); ++v) {
    Status s = lt.status[v];
    if (is_support(v) && s != Status::A) {
      a.pass = false;
      a.detail = "support vertex " + std::to_string(v) + " has status " + to_char(s);
    }
    if ((s == Status::B) != is_leaf(v)) {
      b.pass = false;
      b.detail = "vertex " + std::to_string(v) + (is_leaf(v) ? " is a leaf without status B" : " has status B but is not a leaf");
    }
    if (s == Status::A) {
      int bc = 0;
      for (int u : t.neighbors(v))
        if (lt.status[u] != Status::A) ++bc;
      if (bc < 2) {
        c.pass = false;
        c.detail = "A-vertex " + std::to_string(v) + " has only " + std::to_string(bc) + " B/C neighbors";
      }
    }
    if (s == Status::C)
      for (int u : t.neighbors(v))
        if (lt.status[u] != Status::A) {
          d.pass = false;
          d.detail = "C-vertex " + std::to_string(v) + " has non-A neighbor " + std::to_string(u);
        }
  }
  VerificationReport rep;
  rep.checks = {a, b, c, d};
  return rep;
}

VerificationReport check_matching_labels(const LabeledTree& lt) {
  check_labeled(lt);
  const Graph& t = lt.tree;
  VerificationReport rep;
  ClaimCheck covered{"A-covered-by-every-maximum-matching", true, ""};
  ClaimCheck missable{"BC-missed-by-some-maximum-matching", true, ""};
  for (int v = 0; v < t.order(); ++v) {
    bool essential = covered_by_every_maximum_matching(t, v);
    if (lt.status[v] == Status::A && !essential) {
      covered.pass = false;
      covered.detail = "A-vertex " + std::to_string(v) + " is avoidable";
    }
    if (lt.status[v] != Status::A && essential) {
      missable.pass = false;
      missable.detail = std::string("vertex ") + std::to_string(v) + " of status " + to_char(lt.status[v]) +
                        " is matched by every maximum matching";
    }
  }
  int alpha = matching_number(t);
  int pc = min_path_cover_tree(t).size();
  ClaimCheck equality{"matching-pathcover-equality", 2 * alpha + pc == t.order(),
                      "2*" + std::to_string(alpha) + " + " + std::to_string(pc) + " vs n = " +
                          std::to_string(t.order())};
  rep.checks = {covered, missable, equality};
  return rep;
}

bool equality_holds(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("equality check needs a nonempty graph");
  return 2 * matching_number(g) + path_cover_number(g) == g.order();
}

namespace {

struct Peeler {
  const Graph& t;
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;
  int alive_count;

  explicit Peeler(const Graph& tree) : t(tree), n(tree.order()), adj(n), alive(n, 1), alive_count(n) {
    for (auto [u, v] : t.edges()) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  }

  int deg(int v) const { return static_cast<int>(adj[v].size()); }

  void detach(int v) {
    for (int u : adj[v]) std::erase(adj[u], v);
    adj[v].clear();
    alive[v] = 0;
    --alive_count;
  }

  std::vector<int> alive_vertices() const {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (alive[v]) vs.push_back(v);
    return vs;
  }

  // -1 if the current tree is not a star; the center otherwise
  int star_center() const {
    int center = -1, leaves = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (deg(v) >= 2) {
        if (center >= 0) return -1;
        center = v;
      } else {
        ++leaves;
      }
    }
    return center;
  }

  // distances and parents from src over the alive subtree
  void bfs(int src, std::vector<int>& dist, std::vector<int>& par) const {
    dist.assign(n, -1);
    par.assign(n, -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          queue.push_back(u);
        }
    }
  }

  int farthest(const std::vector<int>& dist) const {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && dist[v] >= 0 && (best < 0 || dist[v] > dist[best])) best = v;
    return best;
  }
};

}  // namespace

std::optional<Recognition> recognize(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("recognize requires a tree");
  if (tree.order() < 3) return std::nullopt;  // family members have at least 3 vertices
  const int n = tree.order();
  int alpha_cur = matching_number(tree);
  int pc_cur = min_path_cover_tree(tree).size();
  if (2 * alpha_cur + pc_cur != n) return std::nullopt;

  Peeler peel(tree);
  struct Frame {
    BuildOp op;
    int attacher;
    std::vector<int> added;
  };
  std::vector<Frame> frames;

  auto current_invariants = [&](int& alpha, int& pc) {
    auto keep = peel.alive_vertices();
    Graph sub = induced_subgraph(tree, keep);
    alpha = matching_number(sub);
    pc = static_cast<int>(min_path_cover_tree(sub).size());
  };

  while (peel.star_center() < 0) {
    if (peel.alive_count < 3) throw std::logic_error("peeled below 3 vertices on an equality tree");
    std::vector<int> dist, par;
    int src = peel.alive_vertices().front();
    peel.bfs(src, dist, par);
    int a = peel.farthest(dist);
    peel.bfs(a, dist, par);
    int u = peel.farthest(dist);
    int v = par[u], w = par[v], x = par[w];

    auto children_of = [&](int z, int pz) {
      std::vector<int> cs;
      for (int y : peel.adj[z])
        if (y != pz) cs.push_back(y);
      return cs;
    };

    if (peel.deg(v) == 2) {
      // a sibling branch of v below w may be deeper-structured; handle it first
      int big = -1;
      for (int y : children_of(w, x))
        if (peel.deg(y) >= 3 && (big < 0 || y < big)) big = y;
      if (big >= 0) {
        v = big;
        u = children_of(v, w).front();
      }
    }

    Frame fr;
    int expect_alpha, expect_pc;
    if (peel.deg(v) >= 4) {
      if (peel.deg(u) != 1) throw std::logic_error("deepest child is not a leaf");
      fr = {BuildOp::AddLeaf, v, {u}};
      expect_alpha = alpha_cur;
      expect_pc = pc_cur - 1;
      peel.detach(u);
    } else if (peel.deg(v) == 3) {
      auto cs = children_of(v, w);
      if (cs.size() != 2 || peel.deg(cs[0]) != 1 || peel.deg(cs[1]) != 1)
        throw std::logic_error("degree-3 branch vertex without two leaf children");
      fr = {BuildOp::AttachP3, w, {cs[0], v, cs[1]}};
      expect_alpha = alpha_cur - 1;
      expect_pc = pc_cur - 1;
      peel.detach(cs[0]);
      peel.detach(cs[1]);
      peel.detach(v);
    } else if (peel.deg(w) >= 3) {
      auto cs = children_of(w, x);
      if (cs.size() != 2 || peel.deg(cs[0]) != 2 || peel.deg(cs[1]) != 2)
        throw std::logic_error("equality tree with an unexpected branch profile");
      int va = cs[0], vb = cs[1];
      int ua = children_of(va, w).front(), ub = children_of(vb, w).front();
      if (peel.deg(ua) != 1 || peel.deg(ub) != 1)
        throw std::logic_error("support children of the branch vertex are not leaves");
      fr = {BuildOp::AttachP5, x, {ua, va, w, vb, ub}};
      expect_alpha = alpha_cur - 2;
      expect_pc = pc_cur - 1;
      for (int y : {ua, ub, va, vb, w}) peel.detach(y);
    } else {
      fr = {BuildOp::GrowPair, w, {v, u}};
      expect_alpha = alpha_cur - 1;
      expect_pc = pc_cur;
      peel.detach(u);
      peel.detach(v);
    }

    int alpha_next, pc_next;
    current_invariants(alpha_next, pc_next);
    if (alpha_next != expect_alpha || pc_next != expect_pc)
      throw std::logic_error("peel changed matching/path-cover numbers unexpectedly");
    alpha_cur = alpha_next;
    pc_cur = pc_next;
    frames.push_back(std::move(fr));
  }

  // base star: center A, leaves B; map onto the seed, extra leaves via AddLeaf
  int center = peel.star_center();
  std::vector<Status> status(n, Status::B);
  status[center] = Status::A;
  std::vector<int> leaves;
  for (int vtx : peel.alive_vertices())
    if (vtx != center) leaves.push_back(vtx);

  std::vector<int> replay_id(n, -1);
  replay_id[center] = 1;
  replay_id[leaves[0]] = 0;
  replay_id[leaves[1]] = 2;
  int next_id = 3;
  std::vector<BuildStep> steps;
  for (size_t i = 2; i < leaves.size(); ++i) {
    steps.push_back(BuildStep{BuildOp::AddLeaf, 1, {next_id}});
    replay_id[leaves[i]] = next_id++;
  }

  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    const Frame& fr = *it;
    switch (fr.op) {
      case BuildOp::AddLeaf:
        if (status[fr.attacher] != Status::A) throw std::logic_error("add-leaf attacher is not A");
        status[fr.added[0]] = Status::B;
        break;
      case BuildOp::GrowPair:
        if (status[fr.attacher] != Status::B) throw std::logic_error("grow-pair attacher is not B");
        status[fr.attacher] = Status::C;
        status[fr.added[0]] = Status::A;
        status[fr.added[1]] = Status::B;
        break;
      case BuildOp::AttachP3:
        if (status[fr.attacher] == Status::B) status[fr.attacher] = Status::C;
        status[fr.added[0]] = Status::B;
        status[fr.added[1]] = Status::A;
        status[fr.added[2]] = Status::B;
        break;
      case BuildOp::AttachP5:
        if (status[fr.attacher] != Status::A) throw std::logic_error("attach-p5 attacher is not A");
        status[fr.added[0]] = Status::B;
        status[fr.added[1]] = Status::A;
        status[fr.added[2]] = Status::C;
        status[fr.added[3]] = Status::A;
        status[fr.added[4]] = Status::B;
        break;
    }
    BuildStep step{fr.op, replay_id[fr.attacher], {}};
    for (int orig : fr.added) {
      replay_id[orig] = next_id;
      step.new_vertices.push_back(next_id++);
    }
    steps.push_back(std::move(step));
  }
  if (next_id != n) throw std::logic_error("replay ids out of sync");
  return Recognition{std::move(status), std::move(steps)};
}

std::string to_edge_list(const LabeledTree& lt) {
  check_labeled(lt);
  std::string out = to_edge_list(lt.tree);
  for (int v = 0; v < lt.tree.order(); ++v) {
    out += "status " + std::to_string(v) + ' ';
    out += to_char(lt.status[v]);
    out += '\n';
  }
  return out;
}

LabeledTree parse_labeled_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<char> status_chars;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      long long nn;
      std::string extra;
      if (tok != "n" || !(ls >> nn) || (ls >> extra) || nn < 0)
        throw ParseErrorAt(lineno, "malformed header");
      n = static_cast<int>(nn);
      status_chars.assign(n, 0);
      continue;
    }
    if (tok == "status") {
      long long v;
      std::string s, extra;
      if (!(ls >> v >> s) || (ls >> extra) || s.size() != 1) throw ParseErrorAt(lineno, "malformed status line");
      if (v < 0 || v >= n) throw ParseErrorAt(lineno, "status vertex out of range");
      if (status_chars[v]) throw ParseErrorAt(lineno, "duplicate status for vertex " + std::to_string(v));
      if (s[0] != 'A' && s[0] != 'B' && s[0] != 'C') throw ParseErrorAt(lineno, "unknown status letter");
      status_chars[v] = s[0];
      continue;
    }
    long long u, v;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra)) throw ParseErrorAt(lineno, "malformed edge");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseErrorAt(lineno, "vertex out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseErrorAt(lineno + 1, "missing header");
  for (int v = 0; v < n; ++v)
    if (!status_chars[v]) throw ParseErrorAt(lineno + 1, "missing status for vertex " + std::to_string(v));
  LabeledTree lt{Graph(n, edges), {}};
  for (char c : status_chars) lt.status.push_back(status_from_char(c));
  check_labeled(lt);
  return lt;
}

std::string to_dot(const LabeledTree& lt) {
  check_labeled(lt);
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < lt.tree.order(); ++v)
    out << "  " << v << " [status=" << to_char(lt.status[v]) << "];\n";
  for (auto [u, v] : lt.tree.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mpc
