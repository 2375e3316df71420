#pragma once

#include "hallbridge/fq.hpp"

#include <map>
#include <string>
#include <vector>

namespace hb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int src, tgt;  // 0-based internally; file format is 1-based
};

/// Path in the quiver, stored as the arrow index sequence in traversal
/// order (["a","b"] means: traverse a, then b). Empty sequence = e_src.
struct Path {
  int src, tgt;
  std::vector<int> arrows;
  int length() const { return int(arrows.size()); }
};

/// Representation of kQ/I: per-vertex space + one matrix per arrow
/// (rows = dim at target, cols = dim at source).
struct Rep {
  std::vector<int> dim;
  std::vector<FqMatrix> mat;

  bool operator==(const Rep& o) const { return dim == o.dim && mat == o.mat; }
  int total_dim() const {
    int s = 0;
    for (int d : dim) s += d;
    return s;
  }
};

/// A finite dimensional monomial algebra kQ/I over F_q: quiver with
/// admissible monomial relations, plus the enumerated basis of nonzero
/// paths. Immutable after parse.
class Algebra {
public:
  /// Parses the line-oriented algebra definition format:
  ///   q = <prime>
  ///   vertices = <n>
  ///   arrow <name> <source> <target>
  ///   relation <name1> <name2> [...]
  /// '#' starts a comment. Rejects non-prime q, non-composable relations
  /// and infinite dimensional algebras.
  static Algebra parse(const std::string& text);

  unsigned q() const { return q_; }
  int vertices() const { return nv_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }

  /// All nonzero paths, ordered by (length, lexicographic arrow sequence,
  /// source vertex); index 0..nv-1 are the trivial paths e_1..e_n.
  const std::vector<Path>& paths() const { return paths_; }
  const std::vector<int>& paths_from_to(int i, int j) const { return by_ends_[i][j]; }
  int dim() const { return int(paths_.size()); }

  /// Index of the path with the given source and arrow sequence, or -1
  /// when the path is zero in the algebra.
  int path_index(int src, const std::vector<int>& arrows) const;

  /// Indecomposable projective P_i = A e_i: basis at vertex j is the set
  /// of nonzero paths i -> j; arrows act by path composition.
  const Rep& projective(int i) const { return projectives_[i]; }
  /// Basis index, at vertex tgt of P_i, of a given path i -> tgt.
  int proj_basis_index(int i, int path_idx) const;

  const Rep& simple(int i) const { return simples_[i]; }

private:
  void build_paths();
  void build_modules();

  unsigned q_ = 2;
  int nv_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> relations_;  // arrow index sequences
  std::vector<Path> paths_;
  std::vector<std::vector<std::vector<int>>> by_ends_;
  std::map<std::pair<int, std::vector<int>>, int> path_lookup_;
  std::vector<Rep> projectives_, simples_;
};

}  // namespace hb
