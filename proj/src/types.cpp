#include "dualpricer/types.hpp"

#include <cmath>
#include <string>

#include "dualpricer/errors.hpp"

namespace dualpricer {

SingularHedgeSystem::SingularHedgeSystem(double determinant)
    : Error("singular hedge system: determinant " + std::to_string(determinant)),
      determinant_(determinant) {}

std::string_view to_string(Right right) noexcept {
    return right == Right::Call ? "call" : "put";
}

std::string_view to_string(Style style) noexcept {
    return style == Style::European ? "european" : "american";
}

void MarketState::validate() const {
    if (!(std::isfinite(spot) && spot > 0.0)) {
        throw DomainError("spot must be positive and finite");
    }
    if (!(std::isfinite(vol) && vol > 0.0)) {
        throw DomainError("volatility must be positive and finite");
    }
    if (!std::isfinite(rate) || !std::isfinite(yield)) {
        throw DomainError("rate and yield must be finite");
    }
}

void OptionSpec::validate() const {
    if (!(std::isfinite(strike) && strike > 0.0)) {
        throw DomainError("strike must be positive and finite");
    }
    if (!(std::isfinite(maturity) && maturity > 0.0)) {
        throw DomainError("maturity must be positive and finite");
    }
}

}  // namespace dualpricer
