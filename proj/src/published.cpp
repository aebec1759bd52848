#include "meshpat/published.hpp"

namespace meshpat {

namespace {

std::vector<PublishedRow> rows_from(int first_n, std::vector<std::vector<long long>> polys, long long scale = 1,
                                    int scaled_from = 0) {
  std::vector<PublishedRow> out;
  int n = first_n;
  for (auto& p : polys) {
    if (n >= scaled_from) {
      for (auto& c : p) c *= scale;
    }
    out.push_back({n, std::move(p), false, {}, {}});
    ++n;
  }
  return out;
}

std::vector<PublishedTable> build() {
  std::vector<PublishedTable> t;

  t.push_back({"R^(1,0,1,0)", QuadSpec::at_least(1, 0, 1, 0), PermClass::all(),
               rows_from(1, {{1},
                             {2},
                             {5, 1},
                             {14, 8, 2},
                             {42, 46, 26, 6},
                             {132, 232, 220, 112, 24},
                             {429, 1093, 1527, 1275, 596, 120},
                             {1430, 4944, 9436, 11384, 8638, 3768, 720}})});
  t.back().rows[5].misprinted = true;
  t.back().rows[5].note = "printed as 24x^5; the degree is n-2 = 4";

  t.push_back({"R^(1,0,2,0)", QuadSpec::at_least(1, 0, 2, 0), PermClass::all(),
               rows_from(1, {{1},
                             {2},
                             {6},
                             {22, 2},
                             {90, 26, 4},
                             {394, 232, 82, 12},
                             {1806, 1776, 1062, 348, 48},
                             {8558, 12546, 11118, 6022, 1836, 240}})});

  t.push_back({"R^(2,0,2,0)", QuadSpec::at_least(2, 0, 2, 0), PermClass::all(),
               rows_from(1, {{1},
                             {2},
                             {6},
                             {24},
                             {116, 4},
                             {632, 80, 8},
                             {3720, 1056, 240, 24},
                             {23072, 11680, 4480, 992, 96}})});

  t.push_back({"R^(1,0,1,1)", QuadSpec::at_least(1, 0, 1, 1), PermClass::all(),
               rows_from(1, {{1},
                             {2},
                             {6},
                             {20, 4},
                             {70, 42, 8},
                             {252, 300, 144, 24},
                             {924, 1812, 1572, 636, 96},
                             {3432, 9960, 13440, 9576, 3432, 480}})});

  t.push_back({"R^(1,1,1,1)", QuadSpec::at_least(1, 1, 1, 1), PermClass::all(),
               rows_from(1, {{1},
                             {2},
                             {6},
                             {24},
                             {104, 16},
                             {464, 224, 32},
                             {2088, 2088, 768, 96},
                             {9392, 16096, 11056, 3392, 384}})});

  t.push_back({"R^(2<=max,empty,0,0)", KMax{2}, PermClass::all(),
               rows_from(0, {{1},
                             {1},
                             {2},
                             {5, 1},
                             {17, 6, 1},
                             {74, 35, 10, 1},
                             {394, 225, 85, 15, 1},
                             {2484, 1624, 735, 175, 21, 1},
                             {18108, 13132, 6769, 1960, 322, 28, 1},
                             {149904, 118124, 67284, 22449, 4536, 546, 36, 1}})});

  t.push_back({"R^(3<=max,empty,0,0)", KMax{3}, PermClass::all(),
               rows_from(0,
                         {{1},
                          {1},
                          {2},
                          {6},
                          {11, 1},
                          {50, 9, 1},
                          {274, 71, 14, 1},
                          {1764, 580, 155, 20, 1},
                          {13068, 5104, 1665, 295, 27, 1},
                          {109584, 48860, 18424, 4025, 511, 35, 1}},
                         2, 4)});
  t.back().rows[9].misprinted = true;
  t.back().rows[9].note = "printed constant term 2*100584; the row must sum to 9!";
  t.back().rows[9].printed = {201168, 97720, 36848, 8050, 1022, 70, 2};

  t.push_back({"R^(4<=max,empty,0,0)", KMax{4}, PermClass::all(),
               rows_from(0,
                         {{1},
                          {1},
                          {2},
                          {6},
                          {24},
                          {19, 1},
                          {107, 12, 1},
                          {702, 119, 18, 1},
                          {5274, 1175, 245, 25, 1},
                          {44712, 12154, 3135, 445, 33, 1}},
                         6, 5)});

  t.push_back({"R^(1,0,1,1) over permutations containing n1", QuadSpec::at_least(1, 0, 1, 1),
               PermClass::block(BlockPattern::parse("n1")),
               rows_from(2, {{1},
                             {2},
                             {5, 1},
                             {14, 8, 2},
                             {41, 50, 23, 6},
                             {122, 268, 214, 92, 24},
                             {365, 1283, 1689, 1117, 466, 120},
                             {1094, 5660, 11412, 11656, 6934, 2844, 720},
                             {3281, 23524, 68042, 102880, 89849, 49996, 20268, 5040}})});
  t.back().rows[5].misprinted = true;
  t.back().rows[5].note = "printed with '92x^3_24x^4'";
  t.back().rows[7].misprinted = true;
  t.back().rows[7].note = "printed with the x^2 dropped from 11412x^2";
  return t;
}

}  // namespace

const std::vector<PublishedTable>& published_tables() {
  static const std::vector<PublishedTable> tables = build();
  return tables;
}

}  // namespace meshpat
