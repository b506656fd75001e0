#include "tables.hpp"

namespace polymin::detail {

const PositionSpec kE7Positions[] = {
    {{1, false}, 0}, {{2, false}, 1}, {{3, false}, 2}, {{4, false}, 3}, {{5, false}, 4},
    {{5, true}, 4}, {{4, false}, 5}, {{6, true}, 5}, {{3, false}, 6}, {{5, true}, 6},
    {{2, false}, 7}, {{4, false}, 7}, {{1, false}, 8}, {{3, false}, 8}, {{5, false}, 8},
    {{2, false}, 9}, {{4, false}, 9}, {{3, false}, 10}, {{5, true}, 10},
    {{4, false}, 11}, {{6, true}, 11}, {{5, false}, 12}, {{5, true}, 12},
    {{4, false}, 13}, {{3, false}, 14}, {{2, false}, 15}, {{1, false}, 16},
};
const CoverSpec kE7Covers[] = {
    {{{1, false}, 0}, {{2, false}, 1}}, {{{2, false}, 1}, {{3, false}, 2}},
    {{{3, false}, 2}, {{4, false}, 3}}, {{{4, false}, 3}, {{5, false}, 4}},
    {{{4, false}, 3}, {{5, true}, 4}}, {{{5, false}, 4}, {{4, false}, 5}},
    {{{5, true}, 4}, {{4, false}, 5}}, {{{5, true}, 4}, {{6, true}, 5}},
    {{{4, false}, 5}, {{3, false}, 6}}, {{{4, false}, 5}, {{5, true}, 6}},
    {{{6, true}, 5}, {{5, true}, 6}}, {{{3, false}, 6}, {{2, false}, 7}},
    {{{3, false}, 6}, {{4, false}, 7}}, {{{5, true}, 6}, {{4, false}, 7}},
    {{{2, false}, 7}, {{1, false}, 8}}, {{{2, false}, 7}, {{3, false}, 8}},
    {{{4, false}, 7}, {{3, false}, 8}}, {{{4, false}, 7}, {{5, false}, 8}},
    {{{1, false}, 8}, {{2, false}, 9}}, {{{3, false}, 8}, {{2, false}, 9}},
    {{{3, false}, 8}, {{4, false}, 9}}, {{{5, false}, 8}, {{4, false}, 9}},
    {{{2, false}, 9}, {{3, false}, 10}}, {{{4, false}, 9}, {{3, false}, 10}},
    {{{4, false}, 9}, {{5, true}, 10}}, {{{3, false}, 10}, {{4, false}, 11}},
    {{{5, true}, 10}, {{4, false}, 11}}, {{{5, true}, 10}, {{6, true}, 11}},
    {{{4, false}, 11}, {{5, false}, 12}}, {{{4, false}, 11}, {{5, true}, 12}},
    {{{6, true}, 11}, {{5, true}, 12}}, {{{5, false}, 12}, {{4, false}, 13}},
    {{{5, true}, 12}, {{4, false}, 13}}, {{{4, false}, 13}, {{3, false}, 14}},
    {{{3, false}, 14}, {{2, false}, 15}}, {{{2, false}, 15}, {{1, false}, 16}},
};

const PositionSpec kE6OnePrimePositions[] = {
    {{6, true}, 0}, {{5, true}, 1}, {{3, true}, 2}, {{2, true}, 3}, {{4, true}, 3},
    {{1, true}, 4}, {{3, true}, 4}, {{2, true}, 5}, {{5, true}, 5}, {{3, true}, 6},
    {{6, true}, 6}, {{4, true}, 7}, {{5, true}, 7}, {{3, true}, 8}, {{2, true}, 9},
    {{1, true}, 10},
};
const CoverSpec kE6OnePrimeCovers[] = {
    {{{6, true}, 0}, {{5, true}, 1}}, {{{5, true}, 1}, {{3, true}, 2}},
    {{{3, true}, 2}, {{2, true}, 3}}, {{{3, true}, 2}, {{4, true}, 3}},
    {{{2, true}, 3}, {{1, true}, 4}}, {{{2, true}, 3}, {{3, true}, 4}},
    {{{4, true}, 3}, {{3, true}, 4}}, {{{1, true}, 4}, {{2, true}, 5}},
    {{{3, true}, 4}, {{2, true}, 5}}, {{{3, true}, 4}, {{5, true}, 5}},
    {{{2, true}, 5}, {{3, true}, 6}}, {{{5, true}, 5}, {{3, true}, 6}},
    {{{5, true}, 5}, {{6, true}, 6}}, {{{3, true}, 6}, {{4, true}, 7}},
    {{{3, true}, 6}, {{5, true}, 7}}, {{{6, true}, 6}, {{5, true}, 7}},
    {{{4, true}, 7}, {{3, true}, 8}}, {{{5, true}, 7}, {{3, true}, 8}},
    {{{3, true}, 8}, {{2, true}, 9}}, {{{2, true}, 9}, {{1, true}, 10}},
};

const PositionSpec kE6SixPrimePositions[] = {
    {{1, true}, 0}, {{2, true}, 1}, {{3, true}, 2}, {{4, true}, 3}, {{5, true}, 3},
    {{3, true}, 4}, {{6, true}, 4}, {{2, true}, 5}, {{5, true}, 5}, {{1, true}, 6},
    {{3, true}, 6}, {{2, true}, 7}, {{4, true}, 7}, {{3, true}, 8}, {{5, true}, 9},
    {{6, true}, 10},
};
const CoverSpec kE6SixPrimeCovers[] = {
    {{{1, true}, 0}, {{2, true}, 1}}, {{{2, true}, 1}, {{3, true}, 2}},
    {{{3, true}, 2}, {{4, true}, 3}}, {{{3, true}, 2}, {{5, true}, 3}},
    {{{4, true}, 3}, {{3, true}, 4}}, {{{5, true}, 3}, {{3, true}, 4}},
    {{{5, true}, 3}, {{6, true}, 4}}, {{{3, true}, 4}, {{2, true}, 5}},
    {{{3, true}, 4}, {{5, true}, 5}}, {{{6, true}, 4}, {{5, true}, 5}},
    {{{2, true}, 5}, {{1, true}, 6}}, {{{2, true}, 5}, {{3, true}, 6}},
    {{{5, true}, 5}, {{3, true}, 6}}, {{{1, true}, 6}, {{2, true}, 7}},
    {{{3, true}, 6}, {{2, true}, 7}}, {{{3, true}, 6}, {{4, true}, 7}},
    {{{2, true}, 7}, {{3, true}, 8}}, {{{4, true}, 7}, {{3, true}, 8}},
    {{{3, true}, 8}, {{5, true}, 9}}, {{{5, true}, 9}, {{6, true}, 10}},
};

const PositionSpec kE6CombinedPositions[] = {
    {{1, true}, 0}, {{2, true}, 1}, {{3, true}, 2}, {{4, true}, 3}, {{5, true}, 3},
    {{3, true}, 4}, {{6, true}, 4}, {{2, true}, 5}, {{5, true}, 5}, {{1, true}, 6},
    {{3, true}, 6}, {{2, true}, 7}, {{4, true}, 7}, {{1, true}, 8}, {{3, true}, 8},
    {{2, true}, 9}, {{5, true}, 9}, {{3, true}, 10}, {{6, true}, 10}, {{4, true}, 11},
    {{5, true}, 11}, {{3, true}, 12}, {{2, true}, 13}, {{1, true}, 14},
};
const CoverSpec kE6CombinedCovers[] = {
    {{{1, true}, 0}, {{2, true}, 1}}, {{{2, true}, 1}, {{3, true}, 2}},
    {{{3, true}, 2}, {{4, true}, 3}}, {{{3, true}, 2}, {{5, true}, 3}},
    {{{4, true}, 3}, {{3, true}, 4}}, {{{5, true}, 3}, {{3, true}, 4}},
    {{{5, true}, 3}, {{6, true}, 4}}, {{{3, true}, 4}, {{2, true}, 5}},
    {{{3, true}, 4}, {{5, true}, 5}}, {{{6, true}, 4}, {{5, true}, 5}},
    {{{2, true}, 5}, {{1, true}, 6}}, {{{2, true}, 5}, {{3, true}, 6}},
    {{{5, true}, 5}, {{3, true}, 6}}, {{{1, true}, 6}, {{2, true}, 7}},
    {{{3, true}, 6}, {{2, true}, 7}}, {{{3, true}, 6}, {{4, true}, 7}},
    {{{2, true}, 7}, {{1, true}, 8}}, {{{2, true}, 7}, {{3, true}, 8}},
    {{{4, true}, 7}, {{3, true}, 8}}, {{{1, true}, 8}, {{2, true}, 9}},
    {{{3, true}, 8}, {{2, true}, 9}}, {{{3, true}, 8}, {{5, true}, 9}},
    {{{2, true}, 9}, {{3, true}, 10}}, {{{5, true}, 9}, {{3, true}, 10}},
    {{{5, true}, 9}, {{6, true}, 10}}, {{{3, true}, 10}, {{4, true}, 11}},
    {{{3, true}, 10}, {{5, true}, 11}}, {{{6, true}, 10}, {{5, true}, 11}},
    {{{4, true}, 11}, {{3, true}, 12}}, {{{5, true}, 11}, {{3, true}, 12}},
    {{{3, true}, 12}, {{2, true}, 13}}, {{{2, true}, 13}, {{1, true}, 14}},
};

const GtCellSpec kGt5Cells[] = {
    {0, -8, CellKind::Zero, {}},
    {0, -7, CellKind::Entry, {{5, true}, 12}},
    {0, -6, CellKind::Entry, {{5, true}, 12}},
    {0, -5, CellKind::Entry, {{5, true}, 12}},
    {0, -4, CellKind::Entry, {{5, true}, 12}},
    {0, -3, CellKind::Entry, {{5, true}, 4}},
    {0, -2, CellKind::Entry, {{5, true}, 4}},
    {0, -1, CellKind::Entry, {{5, true}, 4}},
    {0, 0, CellKind::Entry, {{5, true}, 4}},
    {1, -7, CellKind::Entry, {{1, false}, 16}},
    {1, -6, CellKind::Entry, {{5, true}, 12}},
    {1, -5, CellKind::Entry, {{5, true}, 12}},
    {1, -4, CellKind::Entry, {{5, true}, 12}},
    {1, -3, CellKind::Entry, {{1, false}, 8}},
    {1, -2, CellKind::Entry, {{5, true}, 4}},
    {1, -1, CellKind::Entry, {{5, true}, 4}},
    {1, 0, CellKind::Entry, {{5, true}, 4}},
    {1, 1, CellKind::Entry, {{1, false}, 0}},
    {2, -6, CellKind::Entry, {{2, false}, 15}},
    {2, -5, CellKind::Entry, {{5, true}, 12}},
    {2, -4, CellKind::Entry, {{5, true}, 12}},
    {2, -3, CellKind::Entry, {{2, false}, 9}},
    {2, -2, CellKind::Entry, {{2, false}, 7}},
    {2, -1, CellKind::Entry, {{5, true}, 4}},
    {2, 0, CellKind::Entry, {{5, true}, 4}},
    {2, 1, CellKind::Entry, {{2, false}, 1}},
    {2, 2, CellKind::K, {}},
    {3, -5, CellKind::Entry, {{3, false}, 14}},
    {3, -4, CellKind::Entry, {{5, true}, 12}},
    {3, -3, CellKind::Entry, {{3, false}, 10}},
    {3, -2, CellKind::Entry, {{3, false}, 8}},
    {3, -1, CellKind::Entry, {{3, false}, 6}},
    {3, 0, CellKind::Entry, {{5, true}, 4}},
    {3, 1, CellKind::Entry, {{3, false}, 2}},
    {3, 2, CellKind::K, {}},
    {3, 3, CellKind::K, {}},
    {4, -4, CellKind::Entry, {{4, false}, 13}},
    {4, -3, CellKind::Entry, {{4, false}, 11}},
    {4, -2, CellKind::Entry, {{4, false}, 9}},
    {4, -1, CellKind::Entry, {{4, false}, 7}},
    {4, 0, CellKind::Entry, {{4, false}, 5}},
    {4, 1, CellKind::Entry, {{4, false}, 3}},
    {4, 2, CellKind::K, {}},
    {4, 3, CellKind::K, {}},
    {4, 4, CellKind::K, {}},
    {5, -3, CellKind::Entry, {{5, false}, 12}},
    {5, -2, CellKind::Entry, {{5, true}, 10}},
    {5, -1, CellKind::Entry, {{5, false}, 8}},
    {5, 0, CellKind::Entry, {{5, true}, 6}},
    {5, 1, CellKind::Entry, {{5, false}, 4}},
    {5, 2, CellKind::K, {}},
    {5, 3, CellKind::K, {}},
    {5, 4, CellKind::K, {}},
    {5, 5, CellKind::K, {}},
    {6, -2, CellKind::Entry, {{5, true}, 10}},
    {6, -1, CellKind::Entry, {{5, true}, 10}},
    {6, 0, CellKind::Entry, {{5, true}, 6}},
    {6, 1, CellKind::Entry, {{5, true}, 6}},
    {6, 2, CellKind::K, {}},
    {6, 3, CellKind::K, {}},
    {6, 4, CellKind::K, {}},
    {6, 5, CellKind::K, {}},
    {6, 6, CellKind::K, {}},
};

const GtCellSpec kGt6Cells[] = {
    {0, -8, CellKind::Zero, {}},
    {0, -7, CellKind::Entry, {{5, false}, 12}},
    {0, -6, CellKind::Entry, {{5, false}, 12}},
    {0, -5, CellKind::Entry, {{5, false}, 12}},
    {0, -4, CellKind::Entry, {{5, false}, 12}},
    {0, -3, CellKind::Entry, {{5, false}, 4}},
    {0, -2, CellKind::Entry, {{5, false}, 4}},
    {0, -1, CellKind::Entry, {{5, false}, 4}},
    {0, 0, CellKind::Entry, {{5, false}, 4}},
    {1, -7, CellKind::Entry, {{1, false}, 16}},
    {1, -6, CellKind::Entry, {{5, false}, 12}},
    {1, -5, CellKind::Entry, {{5, false}, 12}},
    {1, -4, CellKind::Entry, {{5, false}, 12}},
    {1, -3, CellKind::Entry, {{1, false}, 8}},
    {1, -2, CellKind::Entry, {{5, false}, 4}},
    {1, -1, CellKind::Entry, {{5, false}, 4}},
    {1, 0, CellKind::Entry, {{5, false}, 4}},
    {1, 1, CellKind::Entry, {{1, false}, 0}},
    {2, -6, CellKind::Entry, {{2, false}, 15}},
    {2, -5, CellKind::Entry, {{5, false}, 12}},
    {2, -4, CellKind::Entry, {{5, false}, 12}},
    {2, -3, CellKind::Entry, {{2, false}, 9}},
    {2, -2, CellKind::Entry, {{2, false}, 7}},
    {2, -1, CellKind::Entry, {{5, false}, 4}},
    {2, 0, CellKind::Entry, {{5, false}, 4}},
    {2, 1, CellKind::Entry, {{2, false}, 1}},
    {2, 2, CellKind::K, {}},
    {3, -5, CellKind::Entry, {{3, false}, 14}},
    {3, -4, CellKind::Entry, {{5, false}, 12}},
    {3, -3, CellKind::Entry, {{3, false}, 10}},
    {3, -2, CellKind::Entry, {{3, false}, 8}},
    {3, -1, CellKind::Entry, {{3, false}, 6}},
    {3, 0, CellKind::Entry, {{5, false}, 4}},
    {3, 1, CellKind::Entry, {{3, false}, 2}},
    {3, 2, CellKind::K, {}},
    {3, 3, CellKind::K, {}},
    {4, -4, CellKind::Entry, {{4, false}, 13}},
    {4, -3, CellKind::Entry, {{4, false}, 11}},
    {4, -2, CellKind::Entry, {{4, false}, 9}},
    {4, -1, CellKind::Entry, {{4, false}, 7}},
    {4, 0, CellKind::Entry, {{4, false}, 5}},
    {4, 1, CellKind::Entry, {{4, false}, 3}},
    {4, 2, CellKind::K, {}},
    {4, 3, CellKind::K, {}},
    {4, 4, CellKind::K, {}},
    {5, -3, CellKind::Entry, {{5, true}, 12}},
    {5, -2, CellKind::Entry, {{5, true}, 10}},
    {5, -1, CellKind::Entry, {{5, false}, 8}},
    {5, 0, CellKind::Entry, {{5, true}, 6}},
    {5, 1, CellKind::Entry, {{5, true}, 4}},
    {5, 2, CellKind::K, {}},
    {5, 3, CellKind::K, {}},
    {5, 4, CellKind::K, {}},
    {5, 5, CellKind::K, {}},
    {6, -2, CellKind::Entry, {{6, true}, 11}},
    {6, -1, CellKind::Entry, {{5, false}, 8}},
    {6, 0, CellKind::Entry, {{5, false}, 8}},
    {6, 1, CellKind::Entry, {{6, true}, 5}},
    {6, 2, CellKind::K, {}},
    {6, 3, CellKind::K, {}},
    {6, 4, CellKind::K, {}},
    {6, 5, CellKind::K, {}},
    {6, 6, CellKind::K, {}},
    {7, -1, CellKind::Entry, {{5, false}, 8}},
    {7, 0, CellKind::Entry, {{5, false}, 8}},
    {7, 1, CellKind::Entry, {{5, false}, 8}},
    {7, 2, CellKind::K, {}},
    {7, 3, CellKind::K, {}},
    {7, 4, CellKind::K, {}},
    {7, 5, CellKind::K, {}},
    {7, 6, CellKind::K, {}},
    {7, 7, CellKind::K, {}},
};

const CompressionTable kCompressionTables[] = {
    {"E7", kE7Positions, kE7Covers},
    {"E6_1p", kE6OnePrimePositions, kE6OnePrimeCovers},
    {"E6_6p", kE6SixPrimePositions, kE6SixPrimeCovers},
    {"E6_ab", kE6CombinedPositions, kE6CombinedCovers},
};

std::span<const GtCellSpec> gt5_cells() { return kGt5Cells; }
std::span<const GtCellSpec> gt6_cells() { return kGt6Cells; }
const CompressionTable& compression_table(int which) { return kCompressionTables[which]; }

}  // namespace polymin::detail
