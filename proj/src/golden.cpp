#include "hamdec/golden.hpp"

namespace hamdec::golden {

namespace {

const std::array<int, 128> kTheta3 = {
    3, 6, 6, 4, 5, 1, 4, 1, 3, 2, 0, 0, 1, 2, 1, 6,
    6, 3, 5, 4, 0, 0, 4, 6, 1, 3, 1, 2, 0, 0, 6, 2,
    6, 1, 3, 1, 5, 3, 4, 4, 0, 0, 3, 2, 1, 3, 1, 2,
    6, 1, 5, 1, 0, 0, 4, 4, 0, 0, 6, 6, 6, 1, 6, 0,
    3, 6, 6, 2, 0, 0, 3, 2, 3, 5, 5, 4, 4, 5, 3, 6,
    6, 3, 5, 5, 5, 5, 5, 6, 1, 3, 1, 4, 4, 1, 6, 0,
    6, 4, 0, 0, 3, 1, 3, 1, 4, 5, 5, 2, 3, 5, 3, 0,
    6, 4, 5, 5, 5, 5, 5, 0, 4, 2, 6, 0, 6, 0, 0, 3,
};

const std::array<int, 128> kTheta5 = {
    4, 3, 0, 0, 0, 0, 0, 0, 4, 3, 2, 2, 0, 0, 2, 2,
    4, 3, 5, 5, 0, 0, 5, 5, 4, 3, 0, 0, 1, 1, 1, 1,
    0, 0, 0, 0, 0, 0, 0, 0, 2, 4, 0, 0, 2, 1, 4, 1,
    0, 0, 5, 5, 0, 0, 5, 5, 1, 4, 1, 2, 0, 0, 4, 0,
    3, 1, 2, 1, 0, 0, 2, 5, 3, 1, 2, 1, 5, 5, 2, 4,
    1, 1, 1, 1, 0, 0, 3, 5, 2, 5, 0, 0, 2, 5, 3, 0,
    2, 1, 3, 1, 2, 4, 3, 5, 4, 1, 3, 1, 5, 5, 3, 0,
    1, 1, 1, 1, 1, 4, 1, 0, 4, 5, 0, 0, 1, 0, 0, 4,
};

const std::array<std::array<int, 4>, 81> kD5Cycle81 = {{
    {0, 0, 0, 0},
    {1, 0, 0, 1},
    {1, 0, 0, 2},
    {1, 0, 0, 0},
    {1, 1, 0, 1},
    {1, 1, 0, 0},
    {1, 2, 0, 1},
    {2, 2, 0, 2},
    {2, 2, 0, 1},
    {0, 2, 0, 2},
    {1, 2, 0, 0},
    {1, 2, 0, 2},
    {2, 2, 0, 0},
    {2, 0, 0, 1},
    {2, 0, 0, 2},
    {2, 0, 0, 0},
    {2, 1, 0, 1},
    {0, 1, 0, 2},
    {0, 1, 0, 1},
    {1, 1, 0, 2},
    {2, 1, 0, 0},
    {2, 1, 0, 2},
    {0, 1, 0, 0},
    {0, 1, 1, 1},
    {0, 2, 1, 2},
    {1, 2, 1, 0},
    {1, 2, 1, 1},
    {2, 2, 1, 2},
    {0, 2, 1, 0},
    {0, 0, 1, 1},
    {1, 0, 1, 2},
    {2, 0, 1, 0},
    {2, 0, 1, 1},
    {0, 0, 1, 2},
    {0, 1, 1, 0},
    {0, 1, 2, 1},
    {1, 1, 2, 2},
    {1, 2, 2, 0},
    {1, 2, 2, 1},
    {1, 0, 2, 2},
    {2, 0, 2, 0},
    {2, 0, 2, 1},
    {0, 0, 2, 2},
    {1, 0, 2, 0},
    {1, 0, 2, 1},
    {2, 0, 2, 2},
    {2, 1, 2, 0},
    {2, 1, 2, 1},
    {2, 2, 2, 2},
    {0, 2, 2, 0},
    {0, 2, 0, 1},
    {0, 2, 0, 0},
    {0, 2, 1, 1},
    {1, 2, 1, 2},
    {1, 0, 1, 0},
    {1, 0, 1, 1},
    {1, 1, 1, 2},
    {2, 1, 1, 0},
    {2, 1, 1, 1},
    {0, 1, 1, 2},
    {1, 1, 1, 0},
    {1, 1, 1, 1},
    {2, 1, 1, 2},
    {2, 2, 1, 0},
    {2, 2, 1, 1},
    {2, 0, 1, 2},
    {0, 0, 1, 0},
    {0, 0, 2, 1},
    {0, 1, 2, 2},
    {1, 1, 2, 0},
    {1, 1, 2, 1},
    {2, 1, 2, 2},
    {0, 1, 2, 0},
    {0, 2, 2, 1},
    {1, 2, 2, 2},
    {2, 2, 2, 0},
    {2, 2, 2, 1},
    {0, 2, 2, 2},
    {0, 0, 2, 0},
    {0, 0, 0, 1},
    {0, 0, 0, 2},
}};

const std::array<SelectorEntry, 27> kD5Selector = {{
    {0b00000, 0},
    {0b00001, 0},
    {0b00010, 0},
    {0b00100, 0},
    {0b01000, 4},
    {0b10000, 1},
    {0b00011, 0},
    {0b00101, 0},
    {0b01001, 2},
    {0b10001, 1},
    {0b00110, 4},
    {0b01010, 4},
    {0b10010, 1},
    {0b01100, 1},
    {0b10100, 3},
    {0b11000, 4},
    {0b00111, 4},
    {0b01011, 2},
    {0b10011, 1},
    {0b01101, 2},
    {0b10101, 3},
    {0b11001, 1},
    {0b01110, 1},
    {0b10110, 4},
    {0b11010, 4},
    {0b11100, 3},
    {0b11111, 0},
}};

const std::vector<CellSignature> kD5Cells = {
    {0b00000, 0, {}, {{0, 1}, {4, -1}, {1, 0}, {2, 0}, {3, 0}}},
    {0b00001, 0, {{0, 1}}, {{4, -1}, {1, 0}, {2, 0}, {3, 0}}},
    {0b00010, 0, {{1, 0}}, {{0, 1}, {4, -1}, {2, 0}, {3, 0}}},
    {0b00100, 0, {{2, 0}}, {{0, 1}, {4, -1}, {1, 0}, {3, 0}}},
    {0b01000, 4, {{3, 0}}, {{0, 0}, {1, 0}, {2, 0}, {4, 0}}},
    {0b10000, 1, {{4, -1}}, {{1, 1}, {0, 0}, {2, 0}, {3, 0}}},
    {0b00011, 0, {{0, 1}, {1, 0}}, {{4, -1}, {2, 0}, {3, 0}}},
    {0b00101, 0, {{0, 1}, {2, 0}}, {{4, -1}, {1, 0}, {3, 0}}},
    {0b01001, 2, {{0, 0}, {3, 0}}, {{2, 1}, {4, -1}, {1, 0}}},
    {0b10001, 1, {{4, -1}, {0, 0}}, {{1, 1}, {2, 0}, {3, 0}}},
    {0b00110, 4, {{1, 0}, {2, 0}}, {{0, 0}, {3, 0}, {4, 0}}},
    {0b01010, 4, {{1, 0}, {3, 0}}, {{0, 0}, {2, 0}, {4, 0}}},
    {0b10010, 1, {{1, 1}, {4, -1}}, {{0, 0}, {2, 0}, {3, 0}}},
    {0b01100, 1, {{2, 0}, {3, 0}}, {{1, 1}, {4, -1}, {0, 0}}},
    {0b10100, 3, {{4, -1}, {2, 0}}, {{3, 1}, {0, 0}, {1, 0}}},
    {0b11000, 4, {{3, 0}, {4, 0}}, {{0, 0}, {1, 0}, {2, 0}}},
    {0b00111, 4, {{0, 0}, {1, 0}, {2, 0}}, {{3, 0}, {4, 0}}},
    {0b01011, 2, {{0, 0}, {1, 0}, {3, 0}}, {{2, 1}, {4, -1}}},
    {0b10011, 1, {{1, 1}, {4, -1}, {0, 0}}, {{2, 0}, {3, 0}}},
    {0b01101, 2, {{2, 1}, {0, 0}, {3, 0}}, {{4, -1}, {1, 0}}},
    {0b10101, 3, {{4, -1}, {0, 0}, {2, 0}}, {{3, 1}, {1, 0}}},
    {0b11001, 1, {{4, -1}, {0, 0}, {3, 0}}, {{1, 1}, {2, 0}}},
    {0b01110, 1, {{1, 1}, {2, 0}, {3, 0}}, {{4, -1}, {0, 0}}},
    {0b10110, 4, {{1, 0}, {2, 0}, {4, 0}}, {{0, 0}, {3, 0}}},
    {0b11010, 4, {{1, 0}, {3, 0}, {4, 0}}, {{0, 0}, {2, 0}}},
    {0b11100, 3, {{3, 1}, {4, -1}, {2, 0}}, {{0, 0}, {1, 0}}},
    {0b11111, 0, {{0, 1}, {4, -1}, {1, 0}, {2, 0}, {3, 0}}, {}},
};

const std::array<Lambda1Row, 7> kLambda1 = {{
    {0b00000, {0, 1, 2, 3, 4}},
    {0b00001, {0, 1, 3, 2, 4}},
    {0b00011, {4, 1, 3, 2, 0}},
    {0b00101, {4, 1, 3, 0, 2}},
    {0b00111, {1, 0, 3, 4, 2}},
    {0b01011, {4, 3, 0, 2, 1}},
    {0b11111, {0, 1, 2, 3, 4}},
}};

const std::vector<int> kAlpha3 = {2, 0, 4};
const std::vector<int> kAlpha5 = {1, 0, 2, 5, 6};

// Rows in class order F1, F2, E1, E2; columns with c=1 first.
const std::array<L4Row, 10> kL4 = {{
    {1, 0, 0, {3, 0, 1, 0}, {{{-2, 1, 1, -1}, {1, -2, 1, -1}, {1, 1, -2, -2}}}},
    {1, 1, 0, {2, 1, 1, 0}, {{{-2, 2, 1, -2}, {1, -1, -1, -1}, {1, -1, -1, -1}}}},
    {1, 1, 1, {3, 0, 0, 1}, {{{-2, 1, 1, -1}, {1, -2, 1, -2}, {1, 1, -2, -2}}}},
    {1, 2, 0, {1, 2, 1, 0}, {{{-2, -1, 2, -1}, {1, -1, -1, -1}, {1, 1, -2, -2}}}},
    {1, 2, 1, {2, 1, 0, 1}, {{{-1, -1, 1, -1}, {-1, 2, -1, -2}, {2, -1, -1, -2}}}},
    {3, 0, 0, {1, 0, 3, 0}, {{{-2, -2, 1, 2}, {2, 1, -2, -2}, {2, -1, -1, -2}}}},
    {3, 1, 0, {0, 1, 3, 0}, {{{-2, -2, 1, 2}, {1, 1, -2, -2}, {2, -1, -1, -2}}}},
    {3, 1, 1, {1, 0, 2, 1}, {{{-2, 1, 1, -1}, {2, -2, -1, -1}, {2, -1, -2, -1}}}},
    {3, 2, 1, {0, 1, 2, 1}, {{{-2, -2, 1, 1}, {1, 1, -2, -2}, {2, -1, -1, -2}}}},
    {3, 2, 2, {1, 0, 1, 2}, {{{-2, 2, -1, -1}, {2, -2, -1, -1}, {2, -2, -1, -1}}}},
}};

const std::array<std::array<int, 3>, 4> kD5M9Sigma = {{
    {-1, -1, -2},
    {-2, 1, 1},
    {1, -2, 1},
    {1, 1, -2},
}};

const std::array<std::array<int, 5>, 5> kD5M9Matrix = {{
    {1, 3, 2, 2, 1},
    {1, 2, 0, 3, 3},
    {1, 2, 3, 0, 3},
    {1, 2, 3, 3, 0},
    {5, 0, 1, 1, 2},
}};

}  // namespace

const std::array<SelectorEntry, 27>& d5_selector_table() { return kD5Selector; }
const std::vector<CellSignature>& d5_cell_signatures() { return kD5Cells; }
const std::array<Lambda1Row, 7>& d5_lambda1_rows() { return kLambda1; }
const std::array<std::array<int, 4>, 81>& d5_cycle81() { return kD5Cycle81; }
const std::array<int, 128>& theta3() { return kTheta3; }
const std::array<int, 128>& theta5() { return kTheta5; }
const std::vector<int>& alpha3() { return kAlpha3; }
const std::vector<int>& alpha5() { return kAlpha5; }
const std::array<L4Row, 10>& l4_table() { return kL4; }
const std::array<std::array<int, 3>, 4>& d5m9_sigma() { return kD5M9Sigma; }
const std::array<std::array<int, 5>, 5>& d5m9_matrix() { return kD5M9Matrix; }

}  // namespace hamdec::golden
