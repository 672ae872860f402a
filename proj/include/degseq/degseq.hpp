#pragma once

#include "degseq/core.hpp"
#include "degseq/cuts.hpp"
#include "degseq/error.hpp"
#include "degseq/flow.hpp"
#include "degseq/oracle.hpp"
#include "degseq/swap.hpp"
#include "degseq/tree.hpp"
#include "degseq/verify.hpp"
