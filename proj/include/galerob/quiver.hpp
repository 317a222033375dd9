#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "galerob/lattice.hpp"

namespace galerob {

/// The eight arrow types, in enumeration order. The order is significant:
/// arrows of a quiver are sorted by (source, kind).
enum class ArrowKind : int {
  East = 0,
  West,
  South,
  North,
  Southeast,
  Northeast,
  Southwest,
  Northwest,
};

inline constexpr std::array<ArrowKind, 8> kAllKinds{
    ArrowKind::East,      ArrowKind::West,      ArrowKind::South,     ArrowKind::North,
    ArrowKind::Southeast, ArrowKind::Northeast, ArrowKind::Southwest, ArrowKind::Northwest};

std::string_view kind_name(ArrowKind k);
ArrowKind parse_kind(std::string_view name);

/// Target minus source (before any wrap): a, b, -c, -d, a-c, a-d, b-c, b-d.
int kind_offset(const GRParams& p, ArrowKind k);
/// Displacement of the lifted arrow in the plane.
std::array<int, 2> kind_displacement(ArrowKind k);
Weight kind_weight(ArrowKind k);
bool is_diagonal(ArrowKind k);

/// Whether the arrow of kind k leaves vertex i. Plain kinds need the target
/// to stay inside 1..N; diagonal kinds need both of their wrap conditions.
bool arrow_exists(const GRParams& p, int i, ArrowKind k);

struct Arrow {
  int source = 0;
  int target = 0;
  ArrowKind kind = ArrowKind::East;

  Weight weight() const { return kind_weight(kind); }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

std::string to_string(const Arrow& a);

/// A path in Q. Arrows are stored in traversal order (first arrow first),
/// i.e. reversed with respect to the composition notation.
struct Path {
  int start = 0;
  std::vector<Arrow> arrows;

  int end() const { return arrows.empty() ? start : arrows.back().target; }
  Weight weight() const;
};

enum class Orientation { Counterclockwise, Clockwise };
enum class FaceShape { Quadrilateral, Triangle, Digon };

/// A face of the torus embedding. The boundary is an oriented cycle; its
/// arrows are listed in traversal order. `corner` is the lower-left corner of
/// the lattice square the face was found in.
struct Face {
  std::vector<Arrow> boundary;
  Orientation orientation = Orientation::Counterclockwise;
  FaceShape shape = FaceShape::Quadrilateral;
  std::array<int, 2> corner{0, 0};

  Weight weight() const;
  int sign() const { return orientation == Orientation::Counterclockwise ? 1 : -1; }
};

/// Untyped directed multigraph on 1..N, stored as an arrow-count matrix
/// (0-based indices internally). Produced by classical mutation, which does
/// not preserve the Gale-Robinson arrow types.
class Multigraph {
 public:
  using Matrix = Eigen::MatrixXi;

  Multigraph() = default;
  explicit Multigraph(int n) : counts_(Matrix::Zero(n, n)) {}
  explicit Multigraph(Matrix counts) : counts_(std::move(counts)) {}

  int size() const { return static_cast<int>(counts_.rows()); }
  /// Number of arrows i -> j, vertices 1-based.
  int count(int i, int j) const { return counts_(i - 1, j - 1); }
  void add(int i, int j, int k = 1) { counts_(i - 1, j - 1) += k; }
  const Matrix& counts() const { return counts_; }
  int arrow_total() const { return counts_.sum(); }

  bool in_two_cycle(int k) const;
  bool two_acyclic() const;

  /// Vertex v becomes v + shift (mod N, representatives 1..N).
  Multigraph relabel(int shift) const;

  friend bool operator==(const Multigraph& x, const Multigraph& y) {
    return x.counts_.rows() == y.counts_.rows() && x.counts_ == y.counts_;
  }

 private:
  Matrix counts_;
};

class Quiver {
 public:
  Quiver(GRParams params, std::vector<Arrow> arrows)
      : params_(params), arrows_(std::move(arrows)) {}

  const GRParams& params() const { return params_; }
  int size() const { return params_.N; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// The unique arrow of the given kind leaving `source`, if present.
  std::optional<Arrow> arrow_from(int source, ArrowKind kind) const;
  int multiplicity(int source, int target) const;
  Multigraph multigraph() const;

 private:
  GRParams params_;
  std::vector<Arrow> arrows_;
};

Quiver build_quiver(const GRParams& params);

/// Vertex of the lift at (x, y): the representative of a*x + c*y in 1..N.
int lift_vertex(const GRParams& params, std::int64_t x, std::int64_t y);

/// Path from u of weight lambda (componentwise >= 0), following the greedy
/// construction: consume a compass step whenever it stays in range, otherwise
/// fall through to the perpendicular or diagonal step. Throws NoPath if
/// u + level(lambda) is outside 1..N.
Path find_path(const Quiver& quiver, int u, const Weight& lambda);

/// Faces of the torus embedding, one per orbit of the translation lattice.
/// Throws NonPlanarSquare if two crossing diagonals share a lattice square.
std::vector<Face> enumerate_faces(const Quiver& quiver);

/// The three-step classical mutation at k. Throws VertexInTwoCycle.
Multigraph classical_mutation(const Multigraph& q, int k);
inline Multigraph classical_mutation(const Quiver& q, int k) {
  return classical_mutation(q.multigraph(), k);
}

/// Dimer condition: around every vertex of the lift the incident arrows
/// alternate between incoming and outgoing in angular order. Antiparallel
/// diagonals on one segment count as an adjacent in/out pair.
bool dimer_alternation_holds(const Quiver& quiver);

/// DOT text, one edge line per arrow, annotated with the arrow kind.
std::string export_dot(const Quiver& quiver);

}  // namespace galerob
