#include "rshe/sigma.hpp"

#include <cmath>
#include <stdexcept>

namespace rshe {

SigmaSpec SigmaSpec::zero() { return SigmaSpec{}; }

SigmaSpec SigmaSpec::constant(double c1) {
  SigmaSpec s;
  s.kind = Kind::constant;
  s.c1 = c1;
  return s;
}

SigmaSpec SigmaSpec::linear(double c1, double c2) {
  SigmaSpec s;
  s.kind = Kind::linear;
  s.c1 = c1;
  s.c2 = c2;
  return s;
}

SigmaSpec SigmaSpec::smooth(const std::string& name) {
  SigmaSpec s;
  if (name == "sin")
    s.kind = Kind::smooth_sin;
  else if (name == "sqrt1p")
    s.kind = Kind::smooth_sqrt1p;
  else
    throw std::invalid_argument("SigmaSpec: unknown smooth sigma '" + name + "'");
  return s;
}

SigmaSpec SigmaSpec::parse(const std::string& text) {
  if (text == "zero") return zero();
  if (text == "sin" || text == "sqrt1p") return smooth(text);
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    try {
      if (head == "constant") return constant(std::stod(args));
      if (head == "linear") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("linear needs c1,c2");
        return linear(std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("SigmaSpec: bad parameters in '" + text + "'");
    }
  }
  throw std::invalid_argument("SigmaSpec: cannot parse '" + text + "'");
}

std::string SigmaSpec::tag() const {
  switch (kind) {
    case Kind::zero:
      return "zero";
    case Kind::constant:
      return "constant:" + std::to_string(c1);
    case Kind::linear:
      return "linear:" + std::to_string(c1) + "," + std::to_string(c2);
    case Kind::smooth_sin:
      return "sin";
    case Kind::smooth_sqrt1p:
      return "sqrt1p";
  }
  return "?";
}

double SigmaSpec::operator()(double u) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::constant:
      return c1;
    case Kind::linear:
      return c1 + c2 * u;
    case Kind::smooth_sin:
      return std::sin(u);
    case Kind::smooth_sqrt1p:
      return std::sqrt(1.0 + u * u);
  }
  return 0.0;
}

void SigmaSpec::apply(const double* u, double* out, std::size_t n) const {
  switch (kind) {
    case Kind::zero:
      for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
      return;
    case Kind::constant:
      for (std::size_t i = 0; i < n; ++i) out[i] = c1;
      return;
    case Kind::linear:
      for (std::size_t i = 0; i < n; ++i) out[i] = c1 + c2 * u[i];
      return;
    case Kind::smooth_sin:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::sin(u[i]);
      return;
    case Kind::smooth_sqrt1p:
      for (std::size_t i = 0; i < n; ++i) out[i] = std::sqrt(1.0 + u[i] * u[i]);
      return;
  }
}

}  // namespace rshe
