#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace fastia {

/// Arithmetic expression over the dimension variable n, used for scaling
/// models and per-dimension parameter bindings. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?
///   unary  := '-' unary | primary
///   primary:= number | 'n' | log(expr) | ln(expr) | binom(expr, expr) | (expr)
/// log and ln are both the natural logarithm.
class ModelExpr {
 public:
  /// Throws ConfigError with a grammar hint on malformed input.
  static ModelExpr parse(std::string_view text);

  double eval(double n) const;
  const std::string& text() const { return text_; }

  ModelExpr(ModelExpr&&) noexcept;
  ModelExpr& operator=(ModelExpr&&) noexcept;
  ModelExpr(const ModelExpr&);
  ModelExpr& operator=(const ModelExpr&);
  ~ModelExpr();

  struct Node;

 private:
  ModelExpr(std::string text, std::unique_ptr<Node> root);

  std::string text_;
  std::unique_ptr<Node> root_;
};

}  // namespace fastia
