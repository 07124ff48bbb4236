#include "lamistrat/weights.hpp"

#include <cctype>
#include <sstream>

#include "lamistrat/error.hpp"

namespace lamistrat {

WeightVector to_weights(std::span<const std::int64_t> values) {
  return WeightVector(values.begin(), values.end());
}

std::vector<std::int64_t> to_machine(std::span<const Weight> weights, std::int64_t cap) {
  std::vector<std::int64_t> out;
  out.reserve(weights.size());
  for (const auto& w : weights) {
    if (w < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
    if (w > cap) {
      throw Error(ErrorKind::WeightCapExceeded,
                  "weight " + w.str() + " exceeds the tracing cap " + std::to_string(cap));
    }
    out.push_back(static_cast<std::int64_t>(w));
  }
  return out;
}

Weight total(std::span<const Weight> weights) {
  Weight sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

WeightVector add(std::span<const Weight> a, std::span<const Weight> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::FrameMismatch, "weight vectors differ in length");
  WeightVector out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

WeightVector parse_weights(const std::string& text) {
  WeightVector out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      out.emplace_back(token);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad weight '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      token.push_back(ch);
    } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '"' || ch == '\n' || ch == '\t') {
      flush();
    } else {
      throw Error(ErrorKind::InvalidInput, std::string("unexpected character '") + ch + "' in weights");
    }
  }
  flush();
  for (const auto& w : out) {
    if (w < 0) throw Error(ErrorKind::InvalidInput, "weights must be nonnegative");
  }
  return out;
}

std::string format_weights(std::span<const Weight> weights) {
  std::ostringstream os;
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  return os.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Weight(text));
    Weight den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(Weight(text.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "bad rational '" + text + "'");
  }
}

std::string format_rational(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace lamistrat
