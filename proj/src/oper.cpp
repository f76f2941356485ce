// SPDX-License-Identifier: MIT

#include "agd/oper.hpp"

#include <stdexcept>

namespace agd {

Oper::Oper(int N, OperType type, SignConvention sign, const std::vector<std::string>& names)
    : N_(N), type_(type), sign_(sign) {
    if (N < 2) throw std::invalid_argument("Oper: order must be at least 2");
    const int jmin = j_min();
    std::vector<std::string> use = names;
    if (use.empty()) {
        for (int j = jmin; j <= N; ++j) {
            if (j == 1) use.push_back("W1");
            else if (j == 2) use.push_back("T");
            else if (j == 3) use.push_back("W");
            else use.push_back("W" + std::to_string(j));
        }
    }
    if (static_cast<int>(use.size()) != N - jmin + 1)
        throw std::invalid_argument("Oper: wrong number of coefficient names");
    auto& tab = FieldTable::instance();
    for (int j = jmin; j <= N; ++j) {
        // Conformal weight j: the coefficient of kappa^(N-j) lam^(N-j).
        w_.push_back(tab.declare(use[static_cast<std::size_t>(j - jmin)], Parity::even, 0, Rat(j)));
    }
}

FieldId Oper::w_field(int j) const {
    if (j < j_min() || j > N_)
        throw std::out_of_range("Oper::w_field: index outside " + std::to_string(j_min()) + ".." +
                                std::to_string(N_));
    return w_[static_cast<std::size_t>(j - j_min())];
}

PsiSymbol Oper::symbol() const {
    PsiSymbol L = PsiSymbol::term(DiffPoly::kappa(N_), N_);
    const Rat s = sign_ == SignConvention::minus ? Rat(-1) : Rat(1);
    for (int j = j_min(); j <= N_; ++j) {
        DiffPoly c = DiffPoly::jet(w_field(j)).mul_kappa(N_ - j).scaled(s);
        L += PsiSymbol::term(std::move(c), N_ - j);
    }
    return L;
}

}  // namespace agd
