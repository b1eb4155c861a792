#pragma once

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "sturm/permutation.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(STURM_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream f(fixture_path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline const sturm::Permutation nine_ball{1, 8, 3, 4, 7, 6, 5, 2, 9};
inline const sturm::Permutation tetra_sigma{1, 8, 9, 12, 5, 4, 13, 14, 3, 6, 11, 10, 7, 2, 15};
inline const sturm::Permutation displaced_sigma{1, 4, 5, 14, 11, 10, 9, 12, 13, 6, 3, 2, 7, 8, 15};

// Boundary orders of the three 3-ball examples, in template labels.
inline const std::vector<int> tetra_h0{1, 5, 11, 6, 12, 15, 14, 7, 2, 10, 13, 8, 3, 9, 4};
inline const std::vector<int> tetra_h1{1, 7, 2, 8, 12, 6, 3, 9, 11, 15, 13, 10, 14, 5, 4};
inline const std::vector<int> displaced_h0{1, 5, 14, 7, 2, 10, 4, 9, 11, 6, 12, 15, 13, 8, 3};
inline const std::vector<int> displaced_h1{1, 7, 2, 8, 12, 6, 11, 15, 13, 10, 14, 5, 4, 9, 3};
inline const std::vector<int> octa_h0{1, 7, 21, 8, 3, 11, 2, 12, 22, 10, 19, 9, 20, 27,
                                      23, 13, 26, 16, 25, 17, 4, 15, 5, 14, 24, 18, 6};
inline const std::vector<int> octa_h1{1, 17, 20, 8, 3, 9, 4, 18, 19, 10, 22, 11, 21, 27,
                                      24, 15, 25, 16, 26, 7, 2, 13, 5, 14, 23, 12, 6};

}  // namespace testing
