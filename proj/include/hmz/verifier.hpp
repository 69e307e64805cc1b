#pragma once

// Grid-scan checks for inequalities, monotonicity, convexity, limits and
// spot identities. Each check returns a ClaimReport whose min_margin is the
// pass statistic: positive means the claimed relation holds with room.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hmz {

using Fn = std::function<double(double)>;

enum class Spacing { Linear, Log };

struct GridSpec {
  double a = 0;
  double b = 1;
  int n = 2000;
  Spacing spacing = Spacing::Linear;
  double eps = 1e-4;  // points lie strictly inside (a + eps, b - eps)
  int refine = 6;     // bisection depth around the worst point

  /// Throws DomainError for an empty or inverted grid.
  std::vector<double> points() const;
};

enum class CheckKind { POINTWISE, MONOTONE, CONVEX, CONCAVE, ROOT_COUNT, ROOT_LOCATE, LIMIT, IDENTITY };
enum class Status { Pass, Fail, Inconclusive };
enum class Relation { Less, LessEq, Greater, GreaterEq };

const char* to_string(CheckKind k);
const char* to_string(Status s);
const char* to_string(Spacing s);

struct ClaimReport {
  std::string id;
  Status status = Status::Fail;
  CheckKind kind = CheckKind::POINTWISE;
  double domain_a = 0;
  double domain_b = 0;
  std::optional<GridSpec> grid;
  double min_margin = 0;
  double argmin_x = 0;
  long points = 0;
  std::string statement;  // the relation being checked, in plain math
  std::string notes;
  bool passed() const { return status == Status::Pass; }
};

struct ScanOptions {
  double margin_floor = 1e-9;     // strict relations pass iff margin > floor
  double nonstrict_slack = 1e-12; // non-strict relations pass iff margin >= -slack
  // Optional function whose sign changes mark poles of the scanned
  // expression; grid points within pole_gap of a located pole are skipped.
  Fn pole_indicator;
  double pole_gap = 1e-6;
};

bool is_strict(Relation r);

/// margin(x) = rhs - lhs for < and <=, lhs - rhs for > and >=.
ClaimReport check_pointwise(const std::string& id, const Fn& lhs, Relation rel, const Fn& rhs,
                            const GridSpec& grid, const ScanOptions& opts = {});

/// direction +1: strictly increasing; -1: strictly decreasing.
/// margin = min direction * (f(x_{i+1}) - f(x_i)) / (x_{i+1} - x_i).
ClaimReport check_monotone(const std::string& id, const Fn& f, const GridSpec& grid,
                           int direction, const ScanOptions& opts = {});

enum class Curvature { Convex, Concave };

/// Second divided differences must carry the required sign. With refute set,
/// the claim is that f is NOT convex/concave on the interval: it passes when
/// some second difference has the opposite sign by more than the floor.
ClaimReport check_convexity(const std::string& id, const Fn& f, const GridSpec& grid,
                            Curvature curvature, const ScanOptions& opts = {},
                            bool refute = false);

struct LimitSpec {
  double endpoint = 0;
  // +1: approach from above (x = endpoint + d); -1: from below;
  // 0: x -> +infinity through x = 1/d.
  int side = 1;
  double expected = 0;  // may be -infinity
  double tol = 1e-3;
  std::vector<double> offsets = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
};

/// Errors |f(x_k) - expected| must not increase along the approach
/// (otherwise Inconclusive) and the last one must be within tol.
/// For expected = -infinity the values must decrease below -1e6.
ClaimReport check_limit(const std::string& id, const Fn& f, const LimitSpec& spec);

/// Bisection to width tol. Throws BracketError without a sign change.
double find_root(const Fn& f, double a, double b, double tol = 1e-12);

/// margin = tol - |value - expected|.
ClaimReport check_value(const std::string& id, double value, double expected, double tol,
                        double at = 0);

/// margin = tol - max |lhs - rhs| over the grid.
ClaimReport check_identity(const std::string& id, const Fn& lhs, const Fn& rhs,
                           const GridSpec& grid, double tol);

}  // namespace hmz
