#pragma once

#include "rainbow/rational.hpp"
#include "rainbow/clustered_graph.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/perturbation.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/graph_json.hpp"

#include "rainbow/audit/claims.hpp"
#include "rainbow/audit/identities.hpp"
#include "rainbow/audit/certificates.hpp"
#include "rainbow/audit/falsify.hpp"
#include "rainbow/audit/report_io.hpp"

#include "rainbow/optimizer/line_search.hpp"
#include "rainbow/optimizer/maximize.hpp"

#include "rainbow/realization/colored_system.hpp"
#include "rainbow/realization/blow_up.hpp"
#include "rainbow/realization/rainbow_search.hpp"
#include "rainbow/realization/saturation.hpp"
