#pragma once

// Mini-language for charge densities: term ("+" term)*, where a term is
// NUMBER, NUMBER "/r", or NUMBER "*r^" NUMBER.  "2/r + 0.3" is the density
// 2/r + 0.3.  Whitespace is ignored; exponents must be >= -1.

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "psdual/electrostatics.hpp"
#include "psdual/number_format.hpp"
#include "psdual/radial_polynomial.hpp"

namespace psdual {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string code, std::size_t offset, const std::string& message)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          code_(std::move(code)),
          offset_(offset) {}

    // "syntax_error" or "unsupported_density"
    const std::string& code() const { return code_; }
    std::size_t offset() const { return offset_; }

  private:
    std::string code_;
    std::size_t offset_;
};

namespace detail {

class DensityScanner {
  public:
    explicit DensityScanner(std::string_view src) : src_(src) {}

    std::vector<PowerTerm> run() {
        std::vector<PowerTerm> terms;
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("syntax_error", pos_, "empty density");
        terms.push_back(term());
        skip_ws();
        while (pos_ < src_.size()) {
            expect('+');
            terms.push_back(term());
            skip_ws();
        }
        return terms;
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) {
            throw ParseError("syntax_error", pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    double number() {
        skip_ws();
        double value = 0.0;
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            throw ParseError("syntax_error", pos_, "expected a number");
        }
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        return value;
    }

    PowerTerm term() {
        const double coefficient = number();
        skip_ws();
        double exponent = 0.0;
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != 'r') {
                throw ParseError("syntax_error", pos_, "expected 'r' after '/'");
            }
            ++pos_;
            exponent = -1.0;
        } else if (pos_ < src_.size() && src_[pos_] == '*') {
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != 'r') {
                throw ParseError("syntax_error", pos_, "expected 'r' after '*'");
            }
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != '^') {
                throw ParseError("syntax_error", pos_, "expected '^' after 'r'");
            }
            ++pos_;
            const std::size_t exp_at = pos_;
            exponent = number();
            if (exponent < -1.0 - kExponentMergeTol) {
                throw ParseError("unsupported_density", exp_at, "exponent below -1 is unsupported");
            }
        }
        return {coefficient, exponent};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ChargeDensity parse_density(std::string_view spec) {
    std::vector<PowerTerm> terms = detail::DensityScanner(spec).run();
    try {
        return ChargeDensity(canonicalize(std::move(terms)));
    } catch (const std::invalid_argument& e) {
        throw ParseError("unsupported_density", 0, e.what());
    }
}

// Canonical rendering; parse_density(render_density(d)) reproduces d exactly.
inline std::string render_density(const ChargeDensity& rho) {
    std::string out;
    for (const auto& t : rho.profile().terms()) {
        if (!out.empty()) out += " + ";
        out += format_number(t.coefficient);
        if (std::abs(t.exponent + 1.0) < kExponentMergeTol) {
            out += "/r";
        } else if (std::abs(t.exponent) >= kExponentMergeTol) {
            out += "*r^" + format_number(t.exponent);
        }
    }
    return out;
}

}  // namespace psdual
