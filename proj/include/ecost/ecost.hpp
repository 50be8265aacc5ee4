#pragma once

#include "ecost/analysis/bounds.hpp"
#include "ecost/analysis/compare.hpp"
#include "ecost/analysis/error.hpp"
#include "ecost/analysis/footprint.hpp"
#include "ecost/analysis/oracle.hpp"
#include "ecost/core/problem.hpp"
#include "ecost/core/rational.hpp"
#include "ecost/domains/adapters.hpp"
#include "ecost/domains/counter.hpp"
#include "ecost/domains/explicit_graph.hpp"
#include "ecost/domains/travel.hpp"
#include "ecost/domains/tree.hpp"
#include "ecost/evaluators/config.hpp"
#include "ecost/evaluators/epsilon.hpp"
#include "ecost/evaluators/evaluate.hpp"
#include "ecost/harness/config.hpp"
#include "ecost/harness/experiment.hpp"
#include "ecost/harness/records.hpp"
#include "ecost/harness/score.hpp"
#include "ecost/harness/summarize.hpp"
#include "ecost/harness/sweep.hpp"
#include "ecost/search/engine.hpp"
#include "ecost/search/metrics.hpp"
#include "ecost/search/node.hpp"
#include "ecost/search/replay.hpp"
