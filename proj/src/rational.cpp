#include "persuasion/rational.hpp"

#include <cctype>

#include "persuasion/error.hpp"

namespace persuasion {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::weights_not_summing_to_one: return "WeightsNotSummingToOne";
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::threshold_out_of_range: return "ThresholdOutOfRange";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::semantic_error: return "SemanticError";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::bounds_too_large: return "BoundsTooLarge";
    case Errc::bad_params: return "BadParams";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw Error(Errc::semantic_error, "rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
    throw Error(Errc::semantic_error, "malformed rational \"" + std::string(text) + "\"");
  }
  return Rational(BigInt(std::string(num_text)), BigInt(std::string(den_text)));
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.q_ == 0) throw Error(Errc::semantic_error, "division by zero rational");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace persuasion
