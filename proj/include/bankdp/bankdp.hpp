#pragma once

#include "bankdp/domain.hpp"
#include "bankdp/errors.hpp"
#include "bankdp/io.hpp"
#include "bankdp/ledger.hpp"
#include "bankdp/money.hpp"
#include "bankdp/oracle.hpp"
#include "bankdp/rate_engine.hpp"
#include "bankdp/solver.hpp"
#include "bankdp/validate.hpp"
