#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace eds {

enum class Block : std::uint8_t { theta, omega, pi, other };

std::string block_name(Block b);

// Declaration of a coframe: an ordered list of 1-form symbols, each tagged
// with its block, plus the ordered list of scalar variable names. The
// ordering is fixed for the lifetime of a system; canonical monomial sorting
// and all matrix index conventions depend on it.
struct CoframeDecl {
    std::vector<std::string> names;
    std::vector<Block> blocks;
    std::vector<std::string> scalars;

    std::map<std::string, std::uint32_t> name_index;
    std::map<std::string, std::uint32_t> scalar_index;

    CoframeDecl() = default;
    CoframeDecl(std::vector<std::string> names_, std::vector<Block> blocks_,
                std::vector<std::string> scalars_);

    std::uint32_t size() const { return static_cast<std::uint32_t>(names.size()); }
    std::uint32_t nscalars() const { return static_cast<std::uint32_t>(scalars.size()); }

    // Indices of symbols carrying the given tag, in coframe order.
    std::vector<std::uint32_t> block_indices(Block b) const;

    bool same_as(const CoframeDecl& o) const {
        return names == o.names && blocks == o.blocks && scalars == o.scalars;
    }
};

using CoframePtr = std::shared_ptr<const CoframeDecl>;

CoframePtr make_coframe(std::vector<std::string> names, std::vector<Block> blocks,
                        std::vector<std::string> scalars);

inline bool compatible(const CoframePtr& a, const CoframePtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace eds
