#pragma once

// Random well-formed DSL text for property tests.

#include <random>
#include <string>

namespace contact::testing {

class RandomExpressionText {
 public:
  explicit RandomExpressionText(unsigned long seed) : rng_(seed) {}

  std::string generate(int depth = 4) { return node(depth); }

 private:
  std::string leaf() {
    static const char* vars[] = {"x", "y", "z"};
    if (pick(4) < 3) return vars[pick(3)];
    const int hundredths = static_cast<int>(pick(400)) - 200;
    std::string s = std::to_string(std::abs(hundredths) / 100) + "." + two_digits(std::abs(hundredths) % 100);
    return hundredths < 0 ? "(-" + s + ")" : s;
  }

  std::string node(int depth) {
    if (depth == 0 || pick(5) == 0) return leaf();
    static const char* binops[] = {" + ", " - ", " * ", " / "};
    static const char* functions[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs"};
    switch (pick(6)) {
      case 0:
      case 1:
      case 2: return "(" + node(depth - 1) + binops[pick(4)] + node(depth - 1) + ")";
      case 3: return "-" + node(depth - 1);
      case 4: {
        const int exponents[] = {-2, -1, 0, 1, 2, 3, 4};
        const int e = exponents[pick(7)];
        return "(" + node(depth - 1) + ")^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      }
      default: return std::string(functions[pick(7)]) + "(" + node(depth - 1) + ")";
    }
  }

  static std::string two_digits(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

  unsigned pick(unsigned n) { return static_cast<unsigned>(rng_() % n); }

  std::mt19937_64 rng_;
};

}  // namespace contact::testing
