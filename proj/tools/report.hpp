#pragma once

#include <bullfree/coloring.hpp>
#include <bullfree/kernel.hpp>
#include <bullfree/solver.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace bullkit {

using nlohmann::json;

// Vertex ids in reports are 1-based, matching the text format.
json vertices_json(const std::vector<bullfree::Vertex>& vs);

// One node per level of the decomposition path; the last node is the leaf
// and carries its trigraph in text format.
json tree_json(const bullfree::SolveResult& r);

json verdict_json(const bullfree::SolveResult& r);
std::string verdict_text(const bullfree::SolveResult& r);

const char* role_name(bullfree::AlphaRequest::Role r);

// `files[i]` is the file written for query i ("" if none).
json transcript_json(const bullfree::KernelTranscript& tr, const std::vector<std::string>& files);

// Accepts a transcript (answers read from its queries) or {"answers": [...]}.
std::vector<bool> answers_from_json(const json& j);

json coloring_json(const bullfree::ColorAssignment& c);

}  // namespace bullkit
