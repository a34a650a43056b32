#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "cmclass/series.hpp"

namespace cmclass {

class GradedModuleExpr;
using ExprPtr = std::shared_ptr<const GradedModuleExpr>;

/// K[X_1..X_vars] with the standard grading.
struct PolyRingNode {
  int vars;
};
/// child(-amount): degree k of the result is degree k - amount of the child.
struct ShiftNode {
  ExprPtr child;
  std::int64_t amount;
};
/// Veronese section: degree k of the result is degree c*k of the child.
struct VeroneseNode {
  ExprPtr child;
  std::int64_t degree;
};
/// Segre product left # right.
struct SegreNode {
  ExprPtr left;
  ExprPtr right;
};

/// Immutable symbolic graded module built from polynomial rings by shifts,
/// Veronese sections and Segre products. Children are shared, copies are cheap.
class GradedModuleExpr {
 public:
  using Node = std::variant<PolyRingNode, ShiftNode, VeroneseNode, SegreNode>;

  explicit GradedModuleExpr(Node node);

  const Node& node() const { return node_; }
  int krull_dim() const { return krullDim_; }

  /// Canonical grammar form, e.g. "segre(poly(2), shift(poly(3), -1))".
  std::string to_string() const;

 private:
  Node node_;
  int krullDim_;
};

GradedModuleExpr poly(int vars);
GradedModuleExpr shift(const GradedModuleExpr& child, std::int64_t amount);
GradedModuleExpr veronese(const GradedModuleExpr& child, std::int64_t degree);
GradedModuleExpr segre(const GradedModuleExpr& left, const GradedModuleExpr& right);

/// A polynomial ring under zero or more shifts, flattened.
struct ShiftedPolyRing {
  int vars;
  std::int64_t shift;
};
std::optional<ShiftedPolyRing> as_shifted_poly_ring(const GradedModuleExpr& expr);

HilbertSeries series_of(const GradedModuleExpr& expr);

/// Parses `poly(<int>)`, `shift(<expr>, <int>)`, `veronese(<expr>, <int>)`,
/// `segre(<expr>, <expr>)`. Whitespace-insensitive; integers may carry a sign.
/// Throws ParseError with a 1-based position.
GradedModuleExpr parse_expr(std::string_view text);

}  // namespace cmclass
