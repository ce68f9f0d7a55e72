#pragma once

#include "chss/cache.hpp"
#include "chss/orchestrator.hpp"

namespace chss {

struct TableRow {
  std::string label;
  IrrSum sum;
  Int mass;      // sum of mult * dim
  Int expected;  // dimension of the space it decomposes
};

struct ModelTables {
  std::string model;
  std::vector<TableRow> rows;
};

ModelTables regenerate_tables(const Model& m, Cache* cache = nullptr);

std::string irrsum_serialize(const Model& m, const IrrSum& s);
IrrSum irrsum_parse(const Model& m, const std::string& text);

std::string tables_markdown(const Model& m, const ModelTables& t);

}  // namespace chss
