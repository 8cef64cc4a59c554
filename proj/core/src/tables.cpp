#include "sdbb/tables.hpp"

namespace sdbb {

const std::vector<TableRow>& benchmark_rows() {
  static const std::vector<TableRow> rows = {
      {1, 16, 4, 4, "1+x+y+y^-1", 0, 4, 2, 2, "4"},
      {1, 24, 8, 4, "1+x+x^-1*y+x*y", 0, 6, 2, 2, "5.33"},
      {1, 30, 6, 5, "1+x+x^2*y+x^-1*y", 0, 3, 5, 0, "5"},
      {1, 32, 12, 4, "1+x+x^2*y+x^-1*y", 0, 4, 4, 2, "6"},
      {1, 36, 10, 4, "1+x+x^-1*y^-1+x^-1*y", 0, 3, 6, 0, "4.44"},
      {1, 40, 6, 6, "1+x+x*y^-1+x^-1", 0, 4, 5, 1, "5.4"},
      {1, 42, 6, 6, "1+x+x^2*y+x^-1*y", 0, 3, 7, 0, "5.14"},
      {1, 48, 16, 4, "1+x+y^2+x^-2", 0, 4, 6, 0, "5.33"},
      {1, 50, 10, 5, "1+x+x^2*y+x^-1*y", 0, 5, 5, 0, "5"},
      {1, 54, 10, 6, "1+x+x^-1*y^-1+x^-1*y", 0, 9, 3, 3, "6.67"},
      {1, 56, 6, 8, "1+x+x^2*y+x^-1*y", 0, 7, 4, 3, "6.86"},
      {1, 60, 12, 5, "1+x+x^2*y+x^-1*y", 0, 6, 5, 0, "5"},
      {1, 64, 8, 8, "1+x+y+y^-1", 0, 8, 4, 4, "8"},
      {1, 66, 6, 8, "1+x+y^2+x^-2", 0, 11, 3, -3, "5.82"},
      {1, 70, 10, 6, "1+x+x^2*y+x^-1*y", 0, 5, 7, 0, "5.14"},
      {1, 72, 12, 6, "1+x+x^2*y+x^-1*y", 0, 6, 6, 3, "6"},
      {1, 78, 6, 10, "1+x+y^2+x^-2", 0, 13, 3, -3, "7.69"},
      {1, 80, 10, 8, "1+x+x^2*y+x^-1*y", 0, 8, 5, 4, "8"},
      {1, 84, 6, 10, "1+x+x^-1*y^-1+x^-1*y", 0, 21, 2, 5, "7.14"},
      {1, 90, 18, 6, "1+x+x^3*y+x^-1*y", 0, 15, 3, 6, "7.2"},
      {1, 96, 12, 8, "1+x+x^-1*y^-1+x^-1*y", 0, 12, 4, 4, "8"},
      {1, 98, 14, 6, "1+x+x^2*y+x^-1*y", 0, 7, 7, 0, "5.14"},
      {1, 100, 12, 8, "1+x+x^2*y+x^-1*y", 0, 5, 10, 0, "7.68"},
      {1, 102, 6, 10, "1+x+y^2+x^-2", 0, 17, 3, 7, "5.88"},
      {1, 104, 6, 12, "1+x+y+x^-1*y^-1", 0, 26, 2, 8, "8.31"},
      {1, 108, 20, 6, "1+x+x*y^2+x^-1*y^2", 0, 18, 3, 6, "6.67"},
      {1, 110, 10, 8, "1+x+x^2*y+x^-1*y", 0, 5, 11, 0, "5.82"},
      {2, 112, 6, 12, "1+x+x^2*y+x^-1*y^2", 0, 7, 8, 0, "7.71"},
      {2, 114, 6, 10, "1+x+y^2+x^-2", 0, 19, 3, 5, "5.26"},
      {2, 120, 8, 12, "1+x+y+x^-2*y^-2", 0, 6, 10, 0, "9.6"},
      {2, 126, 22, 6, "1+x+x^-2*y+x^-1*y^-2", 0, 21, 3, 6, "6.29"},
      {2, 128, 16, 8, "1+x+x^2*y+x^-1*y", 0, 8, 8, 4, "8"},
      {2, 130, 10, 10, "1+x+x^3*y+x^-1*y", 0, 5, 13, 1, "7.69"},
      {2, 132, 8, 12, "1+x+y^2+x^-1*y^-1", 0, 33, 2, 11, "8.73"},
      {2, 136, 6, 14, "1+x+x^2*y+x^-1*y^2", 0, 17, 4, 4, "8.65"},
      {2, 138, 6, 12, "1+x+y^2+x^-2", 0, 23, 3, 5, "6.26"},
      {2, 140, 16, 8, "1+x+x^2*y+x^-1*y", 0, 7, 10, 0, "7.31"},
      {2, 144, 6, 14, "1+x+y+y^-2", 0, 24, 3, 11, "8.17"},
      {2, 150, 6, 14, "1+x+x^-1*y^-1+x^-1*y", 0, 15, 5, 7, "7.84"},
      {2, 152, 6, 16, "1+x+x^2*y+x^-1*y^2", 0, 19, 4, 6, "10.11"},
      {2, 154, 14, 8, "1+x+x^2*y+x^-1*y", 0, 7, 11, 0, "5.82"},
      {2, 156, 12, 10, "1+x+y^2+x^-2", 0, 26, 3, 10, "7.69"},
      {2, 160, 8, 16, "1+x+x^2*y^2+x^-1*y", 0, 10, 8, 0, "12.8"},
      {2, 162, 6, 14, "1+x+y+y^-2", 0, 27, 3, 12, "7.26"},
      {2, 168, 6, 16, "1+x+y+x^-1*y^-1", 0, 42, 2, 10, "9.14"},
      {2, 170, 10, 10, "1+x+x^3*y+x^-1*y", 0, 5, 17, 0, "5.88"},
      {2, 174, 6, 14, "1+x+y^2+x^-2", 0, 29, 3, 5, "6.76"},
      {2, 176, 8, 16, "1+x+y+y^-2", 0, 44, 2, 30, "11.64"},
      {2, 180, 10, 12, "1+x+x^-1*y^-1+x^-1*y", 0, 15, 6, 6, "8"},
      {2, 182, 14, 10, "1+x+x^3*y+x^-2*y", 0, 7, 13, 0, "7.69"},
      {2, 184, 6, 16, "1+x+x^2*y+x^-1*y^2", 0, 23, 4, 4, "8.35"},
      {2, 186, 6, 14, "1+x+y^2+x^-2", 0, 31, 3, 5, "6.32"},
      {2, 190, 10, 10, "1+x+x^3*y+x^-1*y", 0, 5, 19, 0, "5.26"},
      {2, 192, 12, 12, "1+x+y^2+x^-1*y^-1", 0, 48, 2, 21, "9"},
      {2, 196, 14, 10, "1+x+x^3*y+x^-1*y", 0, 7, 14, 0, "7.14"},
      {2, 198, 10, 12, "1+x+x^-1*y^-1+x^-1*y", 0, 33, 3, 9, "7.27"},
      {2, 200, 12, 12, "1+x+x^-1*y+x*y^2", 0, 50, 2, 14, "8.64"},
  };
  return rows;
}

}  // namespace sdbb
