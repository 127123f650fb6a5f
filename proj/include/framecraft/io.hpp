#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "framecraft/constructors.hpp"
#include "framecraft/frame_engine.hpp"
#include "framecraft/group.hpp"
#include "framecraft/harmonic.hpp"
#include "framecraft/multigen.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/zak.hpp"

namespace framecraft::io {

using nlohmann::json;

/// Complex numbers are [re, im]; matrices are row-major nested arrays.
/// Parse failures throw Error{ParseError}.
json to_json(cplx z);
json to_json(const CVector& v);
json to_json(const CMatrix& m);
cplx complex_from_json(const json& j);
CVector vector_from_json(const json& j);
CMatrix matrix_from_json(const json& j);

json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j);

json rep_to_json(const UnitaryRep& rep);
UnitaryRep rep_from_json(const GroupPtr& group, const json& j);

json table_to_json(const IrrepTable& table);
IrrepTable table_from_json(const GroupPtr& group, const json& j, const Tolerances& tol = {});

/// {"values": [...]}; a bare array is accepted on input.
json function_to_json(const CVector& values);
CVector function_from_json(const json& j);

json blocks_to_json(const std::vector<CMatrix>& blocks, const IrrepTable& table);
json report_to_json(const FrameReport& report, const IrrepTable* table);
json range_function_to_json(const RangeFunction& j, const IrrepTable& table);
json frame_matrix_to_json(const FrameMatrix& m);
json riesz_report_to_json(const RieszReport& r, const IrrepTable& table);

json spec_to_json(const MultiGenSpec& spec, const IrrepTable& table);
MultiGenSpec spec_from_json(const json& j, const IrrepTable& table);

json read_json_file(const std::string& path);

}  // namespace framecraft::io
