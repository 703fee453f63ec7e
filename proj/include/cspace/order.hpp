// Monomial orders: lex, degrevlex, and block-elimination orders.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cspace/monomial.hpp"

namespace cspace {

// Every kind is a global order compatible with multiplication. The block
// order compares the front-variable restriction first (degrevlex), so any
// monomial touching a front variable dominates all monomials that do not:
// it eliminates the front block.
enum class OrderKind { Lex, DegRevLex, Block };

class MonomialOrder {
  public:
    MonomialOrder() : kind_(OrderKind::DegRevLex) {}

    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, {}); }
    static MonomialOrder block(std::vector<int> front_vars, std::size_t nvars) {
        std::vector<bool> front(nvars, false);
        for (int v : front_vars) front[static_cast<std::size_t>(v)] = true;
        return MonomialOrder(OrderKind::Block, std::move(front));
    }

    OrderKind kind() const { return kind_; }

    bool is_front(std::size_t var) const {
        return kind_ == OrderKind::Block && front_[var];
    }

    // a > b in this order?
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Lex: {
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] > b[i];
                return false;
            }
            case OrderKind::DegRevLex: {
                if (a.degree() != b.degree()) return a.degree() > b.degree();
                for (std::size_t j = a.size(); j-- > 0;)
                    if (a[j] != b[j]) return a[j] < b[j];
                return false;
            }
            case OrderKind::Block: {
                std::int32_t da = 0, db = 0;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (!front_[i]) continue;
                    da += a[i];
                    db += b[i];
                }
                if (da != db) return da > db;
                for (std::size_t j = a.size(); j-- > 0;) {
                    if (!front_[j]) continue;
                    if (a[j] != b[j]) return a[j] < b[j];
                }
                // back block: degrevlex on the rest
                std::int32_t ba = a.degree() - da, bb = b.degree() - db;
                if (ba != bb) return ba > bb;
                for (std::size_t j = a.size(); j-- > 0;) {
                    if (front_[j]) continue;
                    if (a[j] != b[j]) return a[j] < b[j];
                }
                return false;
            }
        }
        return false;
    }

    std::string name() const {
        switch (kind_) {
            case OrderKind::Lex: return "lex";
            case OrderKind::DegRevLex: return "degrevlex";
            case OrderKind::Block: return "block";
        }
        return "?";
    }

  private:
    MonomialOrder(OrderKind k, std::vector<bool> front) : kind_(k), front_(std::move(front)) {}

    OrderKind kind_;
    std::vector<bool> front_;  // used by Block only
};

}  // namespace cspace
