#include "galerob/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galerob/error.hpp"

namespace galerob {

std::string_view kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::East: return "East";
    case ArrowKind::West: return "West";
    case ArrowKind::South: return "South";
    case ArrowKind::North: return "North";
    case ArrowKind::Southeast: return "Southeast";
    case ArrowKind::Northeast: return "Northeast";
    case ArrowKind::Southwest: return "Southwest";
    case ArrowKind::Northwest: return "Northwest";
  }
  return "?";
}

ArrowKind parse_kind(std::string_view name) {
  for (auto k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown arrow kind '" + std::string(name) + "'");
}

int kind_offset(const GRParams& p, ArrowKind k) {
  switch (k) {
    case ArrowKind::East: return p.a;
    case ArrowKind::West: return p.b();
    case ArrowKind::South: return -p.c;
    case ArrowKind::North: return -p.d();
    case ArrowKind::Southeast: return p.a - p.c;
    case ArrowKind::Northeast: return p.a - p.d();
    case ArrowKind::Southwest: return p.b() - p.c;
    case ArrowKind::Northwest: return p.b() - p.d();
  }
  return 0;
}

std::array<int, 2> kind_displacement(ArrowKind k) {
  switch (k) {
    case ArrowKind::East: return {1, 0};
    case ArrowKind::West: return {-1, 0};
    case ArrowKind::South: return {0, -1};
    case ArrowKind::North: return {0, 1};
    case ArrowKind::Southeast: return {1, -1};
    case ArrowKind::Northeast: return {1, 1};
    case ArrowKind::Southwest: return {-1, -1};
    case ArrowKind::Northwest: return {-1, 1};
  }
  return {0, 0};
}

Weight kind_weight(ArrowKind k) {
  switch (k) {
    case ArrowKind::East: return kE1;
    case ArrowKind::West: return kE2;
    case ArrowKind::South: return kE3;
    case ArrowKind::North: return kE4;
    case ArrowKind::Southeast: return kE1 + kE3;
    case ArrowKind::Northeast: return kE1 + kE4;
    case ArrowKind::Southwest: return kE2 + kE3;
    case ArrowKind::Northwest: return kE2 + kE4;
  }
  return {};
}

bool is_diagonal(ArrowKind k) { return static_cast<int>(k) >= 4; }

bool arrow_exists(const GRParams& p, int i, ArrowKind k) {
  const int N = p.N;
  const bool a_wraps = i + p.a > N;
  const bool b_wraps = i + p.b() > N;
  const bool c_wraps = i - p.c < 1;
  const bool d_wraps = i - p.d() < 1;
  switch (k) {
    case ArrowKind::East: return !a_wraps;
    case ArrowKind::West: return !b_wraps;
    case ArrowKind::South: return !c_wraps;
    case ArrowKind::North: return !d_wraps;
    case ArrowKind::Southeast: return a_wraps && c_wraps;
    case ArrowKind::Northeast: return a_wraps && d_wraps;
    case ArrowKind::Southwest: return b_wraps && c_wraps;
    case ArrowKind::Northwest: return b_wraps && d_wraps;
  }
  return false;
}

std::string to_string(const Arrow& a) {
  std::ostringstream os;
  os << a.source << "->" << a.target << '[' << kind_name(a.kind) << ']';
  return os.str();
}

Weight Path::weight() const {
  Weight w;
  for (const auto& a : arrows) w += a.weight();
  return w;
}

Weight Face::weight() const {
  Weight w;
  for (const auto& a : boundary) w += a.weight();
  return w;
}

bool Multigraph::in_two_cycle(int k) const {
  for (int j = 1; j <= size(); ++j) {
    if (j != k && count(k, j) > 0 && count(j, k) > 0) return true;
  }
  return false;
}

bool Multigraph::two_acyclic() const {
  for (int k = 1; k <= size(); ++k) {
    if (in_two_cycle(k)) return false;
  }
  return true;
}

Multigraph Multigraph::relabel(int shift) const {
  const int n = size();
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ni = wrap_vertex(i + 1 + shift, n) - 1;
      const int nj = wrap_vertex(j + 1 + shift, n) - 1;
      out(ni, nj) = counts_(i, j);
    }
  }
  return Multigraph(std::move(out));
}

std::optional<Arrow> Quiver::arrow_from(int source, ArrowKind kind) const {
  if (!arrow_exists(params_, source, kind)) return std::nullopt;
  return Arrow{source, source + kind_offset(params_, kind), kind};
}

int Quiver::multiplicity(int source, int target) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
    return a.source == source && a.target == target;
  }));
}

Multigraph Quiver::multigraph() const {
  Multigraph g(size());
  for (const auto& a : arrows_) g.add(a.source, a.target);
  return g;
}

Quiver build_quiver(const GRParams& params) {
  if (!params_valid(params)) make_params(params.a, params.c, params.N);
  std::vector<Arrow> arrows;
  for (int i = 1; i <= params.N; ++i) {
    for (auto k : kAllKinds) {
      if (!arrow_exists(params, i, k)) continue;
      const int j = i + kind_offset(params, k);
      if (j < 1 || j > params.N) {
        throw Error(ErrorCode::InternalError, "arrow target out of range", std::to_string(i));
      }
      arrows.push_back(Arrow{i, j, k});
    }
  }
  return Quiver(params, std::move(arrows));
}

int lift_vertex(const GRParams& params, std::int64_t x, std::int64_t y) {
  return wrap_vertex(params.a * x + params.c * y, params.N);
}

namespace {

// One greedy step of the path construction. Returns the arrow to take from u
// while `rest` (componentwise >= 0, nonzero) remains to be consumed.
std::optional<Arrow> greedy_step(const Quiver& q, int u, const Weight& rest) {
  const auto take = [&](ArrowKind k) { return q.arrow_from(u, k); };
  // Each coordinate is tried in turn. When its compass arrow would wrap, the
  // level identity forces a positive perpendicular coordinate, and the arrow
  // is either that perpendicular compass step or the diagonal combining both.
  struct Option {
    std::size_t coord;
    ArrowKind plain;
    std::array<std::size_t, 2> perp;
    std::array<ArrowKind, 2> perp_plain;
    std::array<ArrowKind, 2> diagonal;
  };
  static constexpr std::array<Option, 4> options{{
      {0, ArrowKind::East, {2, 3}, {ArrowKind::South, ArrowKind::North}, {ArrowKind::Southeast, ArrowKind::Northeast}},
      {1, ArrowKind::West, {2, 3}, {ArrowKind::South, ArrowKind::North}, {ArrowKind::Southwest, ArrowKind::Northwest}},
      {2, ArrowKind::South, {0, 1}, {ArrowKind::East, ArrowKind::West}, {ArrowKind::Southeast, ArrowKind::Southwest}},
      {3, ArrowKind::North, {0, 1}, {ArrowKind::East, ArrowKind::West}, {ArrowKind::Northeast, ArrowKind::Northwest}},
  }};
  for (const auto& opt : options) {
    if (rest[opt.coord] <= 0) continue;
    if (auto a = take(opt.plain)) return a;
    for (std::size_t s = 0; s < 2; ++s) {
      if (rest[opt.perp[s]] <= 0) continue;
      if (auto a = take(opt.perp_plain[s])) return a;
      if (auto a = take(opt.diagonal[s])) return a;
    }
  }
  return std::nullopt;
}

}  // namespace

Path find_path(const Quiver& quiver, int u, const Weight& lambda) {
  const auto& p = quiver.params();
  if (u < 1 || u > p.N) throw Error(ErrorCode::NoPath, "start vertex out of range", std::to_string(u));
  if (!nonnegative(lambda)) {
    throw Error(ErrorCode::NoPath, "weight must be componentwise nonnegative", to_string(lambda));
  }
  const std::int64_t v = u + level(p, lambda);
  if (v < 1 || v > p.N) {
    throw Error(ErrorCode::NoPath, "u + level(lambda) is not a vertex", to_string(lambda));
  }
  Path path{u, {}};
  Weight rest = lambda;
  int at = u;
  while (rest != Weight{}) {
    auto step = greedy_step(quiver, at, rest);
    if (!step) {
      throw Error(ErrorCode::InternalError, "greedy path construction stalled at vertex " +
                                                std::to_string(at),
                  to_string(rest));
    }
    Weight next = rest - step->weight();
    if (!nonnegative(next)) {
      throw Error(ErrorCode::InternalError, "greedy step overshot", to_string(rest));
    }
    path.arrows.push_back(*step);
    rest = next;
    at = step->target;
  }
  if (at != v) throw Error(ErrorCode::InternalError, "path ended at the wrong vertex", std::to_string(at));
  return path;
}

namespace {

using Point = std::array<std::int64_t, 2>;

struct LiftedArrow {
  Point from;
  Point to;
  Arrow arrow;
};

std::optional<LiftedArrow> lifted_from(const Quiver& q, Point at, ArrowKind k) {
  const int v = lift_vertex(q.params(), at[0], at[1]);
  auto a = q.arrow_from(v, k);
  if (!a) return std::nullopt;
  const auto d = kind_displacement(k);
  return LiftedArrow{at, Point{at[0] + d[0], at[1] + d[1]}, *a};
}

// The arrow on the segment between two adjacent lattice points, in whichever
// direction it runs. Compass segments always carry exactly one arrow.
LiftedArrow segment_arrow(const Quiver& q, Point p0, Point p1, ArrowKind forward, ArrowKind backward) {
  if (auto a = lifted_from(q, p0, forward)) return *a;
  if (auto a = lifted_from(q, p1, backward)) return *a;
  throw Error(ErrorCode::InternalError, "lattice segment carries no arrow");
}

// Polygon corners in counterclockwise geometric order, with one chosen arrow
// per side. The boundary must be an oriented cycle.
Face make_face(const std::vector<Point>& corners, const std::vector<LiftedArrow>& sides,
               FaceShape shape, Point corner) {
  const std::size_t n = corners.size();
  bool all_forward = true;
  bool all_backward = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p0 = corners[i];
    const Point& p1 = corners[(i + 1) % n];
    const auto& s = sides[i];
    if (!(s.from == p0 && s.to == p1)) all_forward = false;
    if (!(s.from == p1 && s.to == p0)) all_backward = false;
  }
  if (!all_forward && !all_backward) {
    throw Error(ErrorCode::InternalError, "face boundary is not an oriented cycle");
  }
  Face f;
  f.shape = shape;
  f.corner = {static_cast<int>(corner[0]), static_cast<int>(corner[1])};
  if (all_forward) {
    f.orientation = Orientation::Counterclockwise;
    for (const auto& s : sides) f.boundary.push_back(s.arrow);
  } else {
    f.orientation = Orientation::Clockwise;
    for (std::size_t i = n; i-- > 0;) f.boundary.push_back(sides[i].arrow);
  }
  return f;
}

bool forms_cycle(const std::vector<Point>& corners, const std::vector<LiftedArrow>& sides) {
  try {
    make_face(corners, sides, FaceShape::Triangle, {0, 0});
    return true;
  } catch (const Error&) {
    return false;
  }
}

void faces_of_square(const Quiver& q, Point ll, std::vector<Face>& out) {
  const Point lr{ll[0] + 1, ll[1]};
  const Point ur{ll[0] + 1, ll[1] + 1};
  const Point ul{ll[0], ll[1] + 1};

  const auto bottom = segment_arrow(q, ll, lr, ArrowKind::East, ArrowKind::West);
  const auto right = segment_arrow(q, lr, ur, ArrowKind::North, ArrowKind::South);
  const auto top = segment_arrow(q, ur, ul, ArrowKind::West, ArrowKind::East);
  const auto left = segment_arrow(q, ul, ll, ArrowKind::South, ArrowKind::North);

  std::vector<LiftedArrow> main_diag;  // ll -- ur
  if (auto a = lifted_from(q, ll, ArrowKind::Northeast)) main_diag.push_back(*a);
  if (auto a = lifted_from(q, ur, ArrowKind::Southwest)) main_diag.push_back(*a);
  std::vector<LiftedArrow> anti_diag;  // ul -- lr
  if (auto a = lifted_from(q, ul, ArrowKind::Southeast)) anti_diag.push_back(*a);
  if (auto a = lifted_from(q, lr, ArrowKind::Northwest)) anti_diag.push_back(*a);

  if (!main_diag.empty() && !anti_diag.empty()) {
    std::ostringstream os;
    os << "(" << ll[0] << "," << ll[1] << ")";
    throw Error(ErrorCode::NonPlanarSquare, "crossing diagonals in one lattice square", os.str());
  }

  if (main_diag.empty() && anti_diag.empty()) {
    out.push_back(make_face({ll, lr, ur, ul}, {bottom, right, top, left}, FaceShape::Quadrilateral, ll));
    return;
  }

  // Two triangles on either side of the diagonal; with antiparallel diagonal
  // arrows each triangle takes the one that closes its cycle and the pair
  // bounds a digon between them.
  std::vector<Point> t1, t2;
  std::vector<LiftedArrow> s1, s2;
  const auto& diag = main_diag.empty() ? anti_diag : main_diag;
  const bool is_main = !main_diag.empty();

  const auto assemble = [&](const LiftedArrow& d1, const LiftedArrow& d2) {
    if (is_main) {
      t1 = {ll, lr, ur};
      s1 = {bottom, right, d1};
      t2 = {ll, ur, ul};
      s2 = {d2, top, left};
    } else {
      t1 = {ll, lr, ul};
      s1 = {bottom, d1, left};
      t2 = {lr, ur, ul};
      s2 = {right, top, d2};
    }
  };

  if (diag.size() == 1) {
    assemble(diag[0], diag[0]);
    out.push_back(make_face(t1, s1, FaceShape::Triangle, ll));
    out.push_back(make_face(t2, s2, FaceShape::Triangle, ll));
    return;
  }

  for (int choice = 0; choice < 2; ++choice) {
    const auto& d1 = diag[choice];
    const auto& d2 = diag[1 - choice];
    assemble(d1, d2);
    if (!forms_cycle(t1, s1) || !forms_cycle(t2, s2)) continue;
    Face f1 = make_face(t1, s1, FaceShape::Triangle, ll);
    Face f2 = make_face(t2, s2, FaceShape::Triangle, ll);
    if (f1.orientation != f2.orientation) {
      throw Error(ErrorCode::InternalError, "triangles around a digon disagree in orientation");
    }
    Face digon;
    digon.shape = FaceShape::Digon;
    digon.corner = f1.corner;
    digon.orientation = f1.orientation == Orientation::Counterclockwise ? Orientation::Clockwise
                                                                        : Orientation::Counterclockwise;
    digon.boundary = {d1.arrow, d2.arrow};
    out.push_back(std::move(f1));
    out.push_back(std::move(f2));
    out.push_back(std::move(digon));
    return;
  }
  throw Error(ErrorCode::InternalError, "antiparallel diagonals do not close both triangles");
}

}  // namespace

std::vector<Face> enumerate_faces(const Quiver& quiver) {
  const auto& p = quiver.params();
  std::vector<Face> faces;
  // Squares are equivalent under the translation lattice exactly when their
  // lower-left corners carry the same label, so the label is the orbit key.
  std::vector<bool> seen(static_cast<std::size_t>(p.N) + 1, false);
  for (std::int64_t y = 0; y < p.N; ++y) {
    for (std::int64_t x = 0; x < p.N; ++x) {
      const int label = lift_vertex(p, x, y);
      if (seen[static_cast<std::size_t>(label)]) continue;
      seen[static_cast<std::size_t>(label)] = true;
      faces_of_square(quiver, Point{x, y}, faces);
    }
  }
  return faces;
}

Multigraph classical_mutation(const Multigraph& q, int k) {
  const int n = q.size();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidParams, "mutation vertex out of range", std::to_string(k));
  if (q.in_two_cycle(k)) throw Error(ErrorCode::VertexInTwoCycle, "cannot mutate", std::to_string(k));
  const auto& A = q.counts();
  const int kk = k - 1;
  Multigraph::Matrix B = A;
  for (int i = 0; i < n; ++i) {
    if (i == kk) continue;
    for (int j = 0; j < n; ++j) {
      if (j == kk) continue;
      B(i, j) += A(i, kk) * A(kk, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    B(i, kk) = A(kk, i);
    B(kk, i) = A(i, kk);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int m = std::min(B(i, j), B(j, i));
      B(i, j) -= m;
      B(j, i) -= m;
    }
  }
  return Multigraph(std::move(B));
}

bool dimer_alternation_holds(const Quiver& quiver) {
  const auto& p = quiver.params();
  // Directions are encoded by an angular index 0..7 counterclockwise from East.
  const auto angle_index = [](std::array<int, 2> d) {
    static constexpr std::array<std::array<int, 2>, 8> ring{
        {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
    for (int i = 0; i < 8; ++i) {
      if (ring[i] == d) return i;
    }
    return -1;
  };
  for (int v = 1; v <= p.N; ++v) {
    // +1 outgoing, -1 incoming, per angular slot; 2 marks an antiparallel pair.
    std::array<int, 8> slot{};
    for (const auto& a : quiver.arrows()) {
      const auto d = kind_displacement(a.kind);
      if (a.source == v) {
        const int i = angle_index(d);
        slot[i] = slot[i] == -1 ? 2 : (slot[i] == 0 ? 1 : 3);
      }
      if (a.target == v) {
        const int i = angle_index({-d[0], -d[1]});
        slot[i] = slot[i] == 1 ? 2 : (slot[i] == 0 ? -1 : 3);
      }
    }
    std::vector<int> seq;
    for (int s : slot) {
      if (s == 3) return false;
      if (s == 1 || s == -1) seq.push_back(s);
    }
    if (seq.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == seq[(i + 1) % seq.size()]) return false;
    }
  }
  return true;
}

std::string export_dot(const Quiver& quiver) {
  const auto& p = quiver.params();
  std::ostringstream os;
  os << "digraph gale_robinson_a" << p.a << "_c" << p.c << "_N" << p.N << " {\n";
  for (int v = 1; v <= p.N; ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& a : quiver.arrows()) {
    os << "  " << a.source << " -> " << a.target << " [label=\"" << kind_name(a.kind) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace galerob
