#include "cmclass/expr.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cmclass/errors.hpp"

namespace cmclass {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

int derive_dim(const GradedModuleExpr::Node& node) {
  return std::visit(Overloaded{
                        [](const PolyRingNode& n) { return n.vars; },
                        [](const ShiftNode& n) { return n.child->krull_dim(); },
                        [](const VeroneseNode& n) { return n.child->krull_dim(); },
                        [](const SegreNode& n) { return n.left->krull_dim() + n.right->krull_dim() - 1; },
                    },
                    node);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GradedModuleExpr parse() {
    GradedModuleExpr e = expression();
    skip_blanks();
    if (pos_ < text_.size()) fail("unexpected trailing input", pos_);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t index) const {
    throw ParseError(message, index + 1);
  }

  [[noreturn]] void fail_here(const std::string& message) {
    skip_blanks();
    if (pos_ >= text_.size()) {
      // Point at the last non-blank character.
      std::size_t last = text_.size();
      while (last > 0 && std::isspace(static_cast<unsigned char>(text_[last - 1]))) --last;
      throw ParseError("unexpected end of input, " + message, last == 0 ? 1 : last);
    }
    fail(message, pos_);
  }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= text_.size() || text_[pos_] != c) fail_here(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer(std::size_t& start) {
    skip_blanks();
    start = pos_;
    std::size_t i = pos_;
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    const std::size_t digits = i;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    if (i == digits) fail_here("expected an integer");
    std::int64_t value = 0;
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + i, value);
    if (ec != std::errc() || ptr != text_.data() + i) fail("integer out of range", start);
    pos_ = i;
    return value;
  }

  GradedModuleExpr expression() {
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail_here("expected poly, shift, veronese or segre");

    std::size_t argPos = 0;
    if (name == "poly") {
      expect('(');
      const std::int64_t vars = integer(argPos);
      if (vars < 1 || vars > 1'000'000) fail("poly needs a positive variable count", argPos);
      expect(')');
      return cmclass::poly(static_cast<int>(vars));
    }
    if (name == "shift" || name == "veronese") {
      expect('(');
      GradedModuleExpr child = expression();
      expect(',');
      const std::int64_t amount = integer(argPos);
      expect(')');
      if (name == "shift") return cmclass::shift(child, amount);
      if (amount < 1) fail("veronese degree must be >= 1", argPos);
      return cmclass::veronese(child, amount);
    }
    if (name == "segre") {
      expect('(');
      GradedModuleExpr left = expression();
      expect(',');
      GradedModuleExpr right = expression();
      expect(')');
      return cmclass::segre(left, right);
    }
    fail("unknown constructor '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedModuleExpr::GradedModuleExpr(Node node) : node_(std::move(node)), krullDim_(derive_dim(node_)) {}

std::string GradedModuleExpr::to_string() const {
  return std::visit(Overloaded{
                        [](const PolyRingNode& n) { return "poly(" + std::to_string(n.vars) + ")"; },
                        [](const ShiftNode& n) {
                          return "shift(" + n.child->to_string() + ", " + std::to_string(n.amount) + ")";
                        },
                        [](const VeroneseNode& n) {
                          return "veronese(" + n.child->to_string() + ", " + std::to_string(n.degree) + ")";
                        },
                        [](const SegreNode& n) {
                          return "segre(" + n.left->to_string() + ", " + n.right->to_string() + ")";
                        },
                    },
                    node_);
}

GradedModuleExpr poly(int vars) {
  if (vars < 1) throw std::invalid_argument("poly needs at least one variable");
  return GradedModuleExpr(PolyRingNode{vars});
}

GradedModuleExpr shift(const GradedModuleExpr& child, std::int64_t amount) {
  return GradedModuleExpr(ShiftNode{std::make_shared<const GradedModuleExpr>(child), amount});
}

GradedModuleExpr veronese(const GradedModuleExpr& child, std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("Veronese degree must be >= 1");
  return GradedModuleExpr(VeroneseNode{std::make_shared<const GradedModuleExpr>(child), degree});
}

GradedModuleExpr segre(const GradedModuleExpr& left, const GradedModuleExpr& right) {
  return GradedModuleExpr(
      SegreNode{std::make_shared<const GradedModuleExpr>(left), std::make_shared<const GradedModuleExpr>(right)});
}

std::optional<ShiftedPolyRing> as_shifted_poly_ring(const GradedModuleExpr& expr) {
  std::int64_t total = 0;
  const GradedModuleExpr* cur = &expr;
  while (const auto* s = std::get_if<ShiftNode>(&cur->node())) {
    total += s->amount;
    cur = s->child.get();
  }
  if (const auto* p = std::get_if<PolyRingNode>(&cur->node())) return ShiftedPolyRing{p->vars, total};
  return std::nullopt;
}

HilbertSeries series_of(const GradedModuleExpr& expr) {
  return std::visit(Overloaded{
                        [](const PolyRingNode& n) { return polynomial_ring_series(n.vars); },
                        [](const ShiftNode& n) { return shift_series(series_of(*n.child), n.amount); },
                        [](const VeroneseNode& n) { return veronese_section(series_of(*n.child), n.degree); },
                        [](const SegreNode& n) { return hadamard_product(series_of(*n.left), series_of(*n.right)); },
                    },
                    expr.node());
}

GradedModuleExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace cmclass
