#include "fastia/model_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "fastia/errors.hpp"

namespace fastia {

namespace {
constexpr const char* kGrammarHint =
    " (expected an expression over n built from numbers, + - * / ^, log(x), ln(x), "
    "binom(x,y) and parentheses, e.g. \"n*log(n)\" or \"binom(n,4)*n\")";
}

struct ModelExpr::Node {
  enum class Op { constant, variable, add, sub, mul, div, pow, neg, log, binom };

  Op op;
  double value = 0.0;
  std::unique_ptr<Node> lhs, rhs;

  explicit Node(Op o) : op(o) {}

  std::unique_ptr<Node> clone() const {
    auto n = std::make_unique<Node>(op);
    n->value = value;
    if (lhs) n->lhs = lhs->clone();
    if (rhs) n->rhs = rhs->clone();
    return n;
  }

  double eval(double n) const {
    switch (op) {
      case Op::constant: return value;
      case Op::variable: return n;
      case Op::add: return lhs->eval(n) + rhs->eval(n);
      case Op::sub: return lhs->eval(n) - rhs->eval(n);
      case Op::mul: return lhs->eval(n) * rhs->eval(n);
      case Op::div: return lhs->eval(n) / rhs->eval(n);
      case Op::pow: return std::pow(lhs->eval(n), rhs->eval(n));
      case Op::neg: return -lhs->eval(n);
      case Op::log: return std::log(lhs->eval(n));
      case Op::binom: {
        const double x = lhs->eval(n);
        const double y = rhs->eval(n);
        if (y < 0.0 || y > x) return 0.0;
        return std::exp(std::lgamma(x + 1.0) - std::lgamma(y + 1.0) - std::lgamma(x - y + 1.0));
      }
    }
    return 0.0;
  }
};

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<ModelExpr::Node> parse() {
    auto node = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return node;
  }

 private:
  using Node = ModelExpr::Node;
  using Op = Node::Op;

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("model expression '" + std::string(text_) + "': " + what + kGrammarHint);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::unique_ptr<Node> parse_expr() {
    auto node = parse_term();
    while (true) {
      if (consume('+')) {
        auto parent = std::make_unique<Node>(Op::add);
        parent->lhs = std::move(node);
        parent->rhs = parse_term();
        node = std::move(parent);
      } else if (consume('-')) {
        auto parent = std::make_unique<Node>(Op::sub);
        parent->lhs = std::move(node);
        parent->rhs = parse_term();
        node = std::move(parent);
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Node> parse_term() {
    auto node = parse_factor();
    while (true) {
      if (consume('*')) {
        auto parent = std::make_unique<Node>(Op::mul);
        parent->lhs = std::move(node);
        parent->rhs = parse_factor();
        node = std::move(parent);
      } else if (consume('/')) {
        auto parent = std::make_unique<Node>(Op::div);
        parent->lhs = std::move(node);
        parent->rhs = parse_factor();
        node = std::move(parent);
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<Node> parse_factor() {
    if (consume('-')) {
      auto node = std::make_unique<Node>(Op::neg);
      node->lhs = parse_factor();  // -n^2 reads as -(n^2)
      return node;
    }
    auto base = parse_primary();
    if (consume('^')) {
      auto parent = std::make_unique<Node>(Op::pow);
      parent->lhs = std::move(base);
      parent->rhs = parse_factor();  // right associative
      return parent;
    }
    return base;
  }

  std::string parse_identifier() {
    skip_ws();
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name.push_back(text_[pos_++]);
    return name;
  }

  std::unique_ptr<Node> parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto node = parse_expr();
      if (!consume(')')) fail("missing ')'");
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.data() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("invalid number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto node = std::make_unique<Node>(Op::constant);
      node->value = v;
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = parse_identifier();
      if (name == "n") return std::make_unique<Node>(Op::variable);
      if (name == "log" || name == "ln") {
        if (!consume('(')) fail(name + " requires parentheses");
        auto node = std::make_unique<Node>(Op::log);
        node->lhs = parse_expr();
        if (!consume(')')) fail("missing ')'");
        return node;
      }
      if (name == "binom") {
        if (!consume('(')) fail("binom requires parentheses");
        auto node = std::make_unique<Node>(Op::binom);
        node->lhs = parse_expr();
        if (!consume(',')) fail("binom takes two arguments");
        node->rhs = parse_expr();
        if (!consume(')')) fail("missing ')'");
        return node;
      }
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ModelExpr ModelExpr::parse(std::string_view text) {
  Parser parser(text);
  return ModelExpr(std::string(text), parser.parse());
}

double ModelExpr::eval(double n) const { return root_->eval(n); }

ModelExpr::ModelExpr(std::string text, std::unique_ptr<Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}

ModelExpr::ModelExpr(ModelExpr&&) noexcept = default;
ModelExpr& ModelExpr::operator=(ModelExpr&&) noexcept = default;
ModelExpr::ModelExpr(const ModelExpr& other)
    : text_(other.text_), root_(other.root_->clone()) {}
ModelExpr& ModelExpr::operator=(const ModelExpr& other) {
  if (this != &other) {
    text_ = other.text_;
    root_ = other.root_->clone();
  }
  return *this;
}
ModelExpr::~ModelExpr() = default;

}  // namespace fastia
