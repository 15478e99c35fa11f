#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/caps.hpp"
#include "mpc/graph.hpp"
#include "mpc/report.hpp"
#include "mpc/trees.hpp"

namespace mpc {

enum class Status : char { A = 'A', B = 'B', C = 'C' };

char to_char(Status s);
Status status_from_char(char c);

struct LabeledTree {
  Graph tree;
  std::vector<Status> status;
};

// Growth operations; every new vertex gets the next free index.
//   AddLeaf    at an A-vertex: one new B-leaf.
//   GrowPair   at a B-vertex: path u1-u2 hung from the attacher, which turns C;
//              u1 is A, u2 is B.
//   AttachP3   anywhere: a 3-path joined by its middle vertex (statuses B,A,B);
//              a B-attacher turns C.
//   AttachP5   at an A-vertex: a 5-path joined by its middle vertex
//              (statuses B,A,C,A,B).
enum class BuildOp { AddLeaf, GrowPair, AttachP3, AttachP5 };

std::string_view name_of(BuildOp op);
int added_count(BuildOp op);

struct BuildStep {
  BuildOp op;
  int attacher = 0;
  std::vector<int> new_vertices;  // consecutive fresh indices, in path order
};

// P3 with its base labeling: leaves B, center A.
LabeledTree seed_p3();
LabeledTree apply_operation(const LabeledTree& lt, const BuildStep& step);

CanonicalForm labeled_canonical_form(const LabeledTree& lt);

struct FamilyEnumeration {
  std::vector<LabeledTree> members;        // breadth-first discovery order
  std::set<std::string> labeled_codes;     // canonical codes with statuses
  std::set<std::string> underlying_codes;  // canonical codes of the bare trees
};

// Closure of the seed under the four operations, capped at max_n vertices.
FamilyEnumeration enumerate_family(int max_n, int cap = kDefaultEnumCap);

// Structural label invariants: supports are A, the leaves are exactly the
// B-vertices, A-vertices have two neighbors outside A, C-neighborhoods are A.
VerificationReport check_structure(const LabeledTree& lt);

// Matching behavior of the label classes: A-vertices are covered by every
// maximum matching, B- and C-vertices are each missed by some maximum
// matching, and 2*alpha' + pc = n.
VerificationReport check_matching_labels(const LabeledTree& lt);

// 2*alpha'(g) + pc(g) == order(g)
bool equality_holds(const Graph& g);

struct Recognition {
  std::vector<Status> labeling;
  std::vector<BuildStep> steps;  // replay from seed_p3 via apply_operation
};

// Decides membership of a tree (n >= 3) in the family by peeling a deepest
// branch of a longest path; returns the labeling plus replayable build steps.
std::optional<Recognition> recognize(const Graph& tree);

std::string to_edge_list(const LabeledTree& lt);  // adds "status v X" lines
LabeledTree parse_labeled_tree(std::string_view text);
std::string to_dot(const LabeledTree& lt);

}  // namespace mpc
