#pragma once

#include "useries/biseries.hpp"
#include "useries/catalog.hpp"
#include "useries/common.hpp"
#include "useries/gauss.hpp"
#include "useries/hilbert.hpp"
#include "useries/membership.hpp"
#include "useries/oracles.hpp"
#include "useries/partition_series.hpp"
#include "useries/report.hpp"
#include "useries/scenarios.hpp"
#include "useries/zpoly.hpp"
