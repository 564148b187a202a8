#pragma once

// Reference data for the bound-30 search, frozen from an independent
// implementation: the 42 qualifying coprime weight triples with the passing
// orientation the search reports, its relation, width, n, and the delta and
// gamma sets, plus the conventional listing of the same planes in the
// orientation with (a, b, c) roles as usually displayed.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

struct Bound30Row {
  std::array<std::int64_t, 3> triple;  // sorted ascending
  std::array<std::int64_t, 3> abc;     // passing orientation
  std::array<std::int64_t, 3> efg;     // relation, g stored positive
  const char* w;
  std::int64_t n;
  std::vector<std::int64_t> delta;
  std::vector<std::int64_t> gamma;
};

// Displayed orientation and relation for the same 42 planes.
struct DisplayedRow {
  std::array<std::int64_t, 3> abc;
  std::array<std::int64_t, 3> efg;
};

inline const std::vector<Bound30Row>& bound30_rows() {
  static const std::vector<Bound30Row> rows = {
    {{7, 15, 26}, {15, 7, 26}, {3, 1, 2}, "104/105", 1, {-1}, {0}},
    {{7, 17, 22}, {7, 22, 17}, {1, 2, 3}, "153/154", 8, {-1, -4, -7, -10, -13, -16, -19, -22}, {2, 5, 8, 11, 14, 17, 20, 23}},
    {{7, 17, 29}, {17, 7, 29}, {3, 1, 2}, "116/119", 1, {-1}, {0}},
    {{7, 19, 25}, {25, 7, 19}, {2, 1, 3}, "171/175", 1, {-2}, {0}},
    {{9, 13, 29}, {9, 13, 29}, {5, 1, 2}, "116/117", 1, {-1}, {0}},
    {{10, 11, 27}, {11, 10, 27}, {4, 1, 2}, "54/55", 1, {-1}, {0}},
    {{10, 13, 21}, {10, 21, 13}, {1, 2, 4}, "104/105", 6, {-1, -5, -9, -13, -17, -21}, {3, 7, 11, 15, 19, 23}},
    {{10, 17, 29}, {29, 10, 17}, {2, 1, 4}, "136/145", 1, {-3}, {0}},
    {{10, 27, 29}, {10, 27, 29}, {6, 1, 3}, "29/30", 1, {-2}, {0}},
    {{11, 13, 19}, {19, 11, 13}, {1, 3, 4}, "208/209", 3, {-3, -7, -11}, {2, 6, 10}},
    {{11, 16, 25}, {25, 16, 11}, {2, 1, 6}, "99/100", 1, {-5}, {0}},
    {{11, 19, 29}, {29, 19, 11}, {2, 1, 7}, "539/551", 1, {-6}, {0}},
    {{11, 21, 25}, {11, 21, 25}, {3, 2, 3}, "75/77", 2, {-2, -5}, {1, 4}},
    {{12, 13, 17}, {12, 13, 17}, {1, 3, 3}, "51/52", 5, {-1, -4, -7, -10, -13}, {2, 5, 8, 11, 14}},
    {{12, 19, 23}, {19, 12, 23}, {3, 1, 3}, "69/76", 1, {-2}, {0}},
    {{12, 25, 29}, {25, 12, 29}, {3, 1, 3}, "87/100", 1, {-2}, {0}},
    {{13, 17, 23}, {13, 17, 23}, {4, 1, 3}, "207/221", 1, {-2}, {0}},
    {{13, 18, 25}, {13, 18, 25}, {3, 2, 3}, "25/26", 2, {-1, -4}, {2, 5}},
    {{13, 19, 24}, {13, 24, 19}, {4, 1, 4}, "38/39", 1, {-3}, {0}},
    {{13, 22, 29}, {13, 22, 29}, {5, 1, 3}, "261/286", 1, {-2}, {0}},
    {{14, 19, 27}, {19, 27, 14}, {3, 1, 6}, "56/57", 1, {-5}, {0}},
    {{14, 25, 29}, {14, 29, 25}, {3, 2, 4}, "200/203", 2, {-3, -7}, {1, 5}},
    {{16, 17, 27}, {16, 17, 27}, {4, 1, 3}, "243/272", 1, {-2}, {0}},
    {{17, 20, 21}, {21, 17, 20}, {3, 1, 4}, "320/357", 1, {-3}, {0}},
    {{17, 21, 22}, {21, 22, 17}, {3, 1, 5}, "425/462", 1, {-4}, {0}},
    {{17, 23, 24}, {17, 24, 23}, {4, 1, 4}, "46/51", 1, {-3}, {0}},
    {{17, 23, 25}, {25, 17, 23}, {3, 1, 4}, "368/425", 1, {-3}, {0}},
    {{17, 24, 26}, {24, 26, 17}, {1, 3, 6}, "51/52", 5, {-2, -8, -14, -20, -26}, {4, 10, 16, 22, 28}},
    {{17, 25, 27}, {25, 27, 17}, {3, 1, 6}, "68/75", 1, {-5}, {0}},
    {{17, 26, 29}, {29, 17, 26}, {3, 1, 4}, "416/493", 1, {-3}, {0}},
    {{17, 27, 28}, {17, 27, 28}, {5, 1, 4}, "448/459", 1, {-3}, {0}},
    {{17, 29, 30}, {29, 30, 17}, {1, 3, 7}, "833/870", 5, {-2, -9, -16, -23, -30}, {6, 13, 20, 27, 34}},
    {{18, 23, 25}, {18, 23, 25}, {3, 2, 4}, "200/207", 2, {-1, -5}, {3, 7}},
    {{18, 26, 29}, {18, 26, 29}, {5, 1, 4}, "116/117", 1, {-2}, {0}},
    {{19, 20, 27}, {27, 19, 20}, {3, 1, 5}, "500/513", 1, {-3}, {0}},
    {{19, 21, 29}, {29, 19, 21}, {1, 4, 5}, "525/551", 4, {-4, -9, -14, -19}, {3, 8, 13, 18}},
    {{19, 22, 26}, {19, 22, 26}, {2, 3, 4}, "208/209", 3, {-3, -7, -11}, {2, 6, 10}},
    {{19, 26, 29}, {19, 26, 29}, {2, 3, 4}, "232/247", 3, {-3, -7, -11}, {2, 6, 10}},
    {{20, 21, 26}, {20, 21, 26}, {1, 4, 4}, "104/105", 6, {-1, -5, -9, -13, -17, -21}, {3, 7, 11, 15, 19, 23}},
    {{20, 22, 27}, {22, 20, 27}, {4, 1, 4}, "54/55", 1, {-2}, {0}},
    {{22, 23, 27}, {22, 27, 23}, {4, 1, 5}, "575/594", 1, {-3}, {0}},
    {{23, 25, 28}, {23, 28, 25}, {3, 2, 5}, "625/644", 2, {-1, -6}, {4, 9}},
  };
  return rows;
}

inline const std::vector<DisplayedRow>& bound30_displayed() {
  static const std::vector<DisplayedRow> rows = {
    {{7, 15, 26}, {1, 3, 2}},
    {{7, 17, 29}, {1, 3, 2}},
    {{7, 22, 17}, {1, 2, 3}},
    {{7, 25, 19}, {1, 2, 3}},
    {{10, 11, 27}, {1, 4, 2}},
    {{10, 21, 13}, {1, 2, 4}},
    {{10, 29, 17}, {1, 2, 4}},
    {{11, 21, 25}, {3, 2, 3}},
    {{12, 13, 17}, {1, 3, 3}},
    {{12, 19, 23}, {1, 3, 3}},
    {{12, 25, 29}, {1, 3, 3}},
    {{13, 9, 29}, {1, 5, 2}},
    {{13, 18, 25}, {3, 2, 3}},
    {{14, 29, 25}, {3, 2, 4}},
    {{16, 25, 11}, {1, 2, 6}},
    {{17, 13, 23}, {1, 4, 3}},
    {{17, 16, 27}, {1, 4, 3}},
    {{17, 21, 20}, {1, 3, 4}},
    {{17, 25, 23}, {1, 3, 4}},
    {{17, 29, 26}, {1, 3, 4}},
    {{18, 23, 25}, {3, 2, 4}},
    {{19, 11, 13}, {1, 3, 4}},
    {{19, 22, 26}, {2, 3, 4}},
    {{19, 26, 29}, {2, 3, 4}},
    {{19, 27, 20}, {1, 3, 5}},
    {{19, 29, 11}, {1, 2, 7}},
    {{20, 21, 26}, {1, 4, 4}},
    {{20, 22, 27}, {1, 4, 4}},
    {{22, 13, 29}, {1, 5, 3}},
    {{22, 21, 17}, {1, 3, 5}},
    {{23, 28, 25}, {3, 2, 5}},
    {{24, 13, 19}, {1, 4, 4}},
    {{24, 17, 23}, {1, 4, 4}},
    {{24, 26, 17}, {1, 3, 6}},
    {{26, 18, 29}, {1, 5, 4}},
    {{27, 10, 29}, {1, 6, 3}},
    {{27, 17, 28}, {1, 5, 4}},
    {{27, 19, 14}, {1, 3, 6}},
    {{27, 22, 23}, {1, 4, 5}},
    {{27, 25, 17}, {1, 3, 6}},
    {{29, 19, 21}, {1, 4, 5}},
    {{29, 30, 17}, {1, 3, 7}},
  };
  return rows;
}

}  // namespace fixtures
