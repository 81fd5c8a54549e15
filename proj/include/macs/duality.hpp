#pragma once

#include "macs/poset.hpp"

namespace macs {

/// (x, y) -> (x, m2 + 1 - y). Maps antichains onto strict chains and back,
/// and maximal ones onto maximal ones.
inline PointSet reflect_columns(const PointSet& s) {
    std::vector<Point> out;
    out.reserve(s.size());
    for (const Point& p : s) {
        out.push_back({p.x, s.shape().m2 + 1 - p.y});
    }
    return PointSet(s.shape(), std::move(out));
}

inline PointSet antichain_to_strict_chain(const PointSet& antichain) {
    require_kind(antichain, SetKind::Antichain, ErrorCode::NotAntichain);
    return reflect_columns(antichain);
}

inline PointSet strict_chain_to_antichain(const PointSet& chain) {
    require_kind(chain, SetKind::StrictChain, ErrorCode::NotStrictChain);
    return reflect_columns(chain);
}

} // namespace macs
