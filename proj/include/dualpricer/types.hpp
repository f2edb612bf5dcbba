#pragma once

#include <string_view>

namespace dualpricer {

enum class Right { Call, Put };
enum class Style { European, American };

constexpr Right flip(Right right) noexcept {
    return right == Right::Call ? Right::Put : Right::Call;
}

std::string_view to_string(Right right) noexcept;
std::string_view to_string(Style style) noexcept;

/// Market inputs under Black-Scholes-Merton. For currency options `yield` is
/// the foreign risk-free rate (Garman-Kohlhagen).
struct MarketState {
    double spot = 0.0;
    double rate = 0.0;   // continuously compounded domestic rate
    double yield = 0.0;  // continuous dividend yield or foreign rate
    double vol = 0.0;    // annualized

    /// Throws DomainError unless spot > 0, vol > 0 and the rates are finite.
    void validate() const;

    friend bool operator==(const MarketState&, const MarketState&) = default;
};

struct OptionSpec {
    Right right = Right::Call;
    Style style = Style::European;
    double strike = 0.0;
    double maturity = 0.0;  // year fraction

    void validate() const;

    friend bool operator==(const OptionSpec&, const OptionSpec&) = default;
};

}  // namespace dualpricer
