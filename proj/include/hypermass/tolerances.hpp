#pragma once

namespace hypermass {

struct Tolerances {
    double abs = 1e-10;
    double rel = 1e-8;
    /// |f'| must exceed this for a height to count as a regular value.
    double reg = 1e-8;
};

}  // namespace hypermass
