#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gsv/kernels.hpp"
#include "gsv/prime_field.hpp"
#include "gsv/util.hpp"

namespace gsv {

// Dense incremental row echelon over F_p, p < 2^15, on top of the row
// kernels. Pivot rows are kept monic; insertion order fixes the result.
class ModpEchelon {
public:
    ModpEchelon(uint64_t p, std::size_t width) : p_(static_cast<uint16_t>(p)), width_(width), pivot_at_(width, -1) {
        if (p >= (1u << 15)) fail(ErrKind::Internal, "modp-echelon-prime", "p must be < 2^15");
    }

    // Returns true if the row was independent (rank grew).
    bool push_row(std::vector<uint16_t> row) {
        if (row.size() != width_) fail(ErrKind::Internal, "dim-mismatch", "echelon row width mismatch");
        std::size_t lead = reduce(row, 0);
        if (lead == width_) return false;
        normalize(row, lead);
        insert(std::move(row), lead);
        return true;
    }

    // Reduces `row` in place against the current pivots starting at column
    // `from`; returns the leading column (width if zero).
    std::size_t reduce(std::vector<uint16_t>& row, std::size_t from) const {
        std::size_t lead = kernels::first_nonzero(row.data(), width_, from);
        while (lead < width_) {
            int pr = pivot_at_[lead];
            if (pr < 0) break;
            uint16_t c = row[lead];
            kernels::axpy(row.data() + lead, rows_[pr].data() + lead,
                          static_cast<uint16_t>(p_ - c), p_, width_ - lead);
            lead = kernels::first_nonzero(row.data(), width_, lead);
        }
        return lead;
    }

    std::size_t rank() const { return rows_.size(); }

    // Canonical reduced row echelon form (rows ordered by pivot column).
    void to_rref() {
        std::vector<std::size_t> order = sorted_rows();
        for (std::size_t oi = order.size(); oi-- > 0;) {
            std::size_t i = order[oi];
            std::size_t col = leads_[i];
            for (std::size_t oj = 0; oj < oi; ++oj) {
                std::size_t j = order[oj];
                uint16_t c = rows_[j][col];
                if (c == 0) continue;
                kernels::axpy(rows_[j].data() + col, rows_[i].data() + col,
                              static_cast<uint16_t>(p_ - c), p_, width_ - col);
            }
        }
    }

    // Row indices sorted by pivot column.
    std::vector<std::size_t> sorted_rows() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
        return order;
    }

    const std::vector<uint16_t>& row(std::size_t i) const { return rows_[i]; }
    std::size_t lead(std::size_t i) const { return leads_[i]; }
    uint16_t p() const { return p_; }

private:
    void normalize(std::vector<uint16_t>& row, std::size_t lead) {
        uint16_t c = row[lead];
        if (c != 1) {
            PrimeField f(p_);
            uint16_t ci = static_cast<uint16_t>(f.inv(c));
            kernels::scale(row.data() + lead, ci, p_, width_ - lead);
        }
    }
    void insert(std::vector<uint16_t> row, std::size_t lead) {
        pivot_at_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        leads_.push_back(lead);
    }

    uint16_t p_;
    std::size_t width_;
    std::vector<int> pivot_at_;
    std::vector<std::vector<uint16_t>> rows_;
    std::vector<std::size_t> leads_;
};

} // namespace gsv
