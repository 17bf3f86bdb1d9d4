#pragma once

#include <brieskorn/brieskorn.hpp>
#include <brieskorn/errors.hpp>
#include <brieskorn/exactla.hpp>
#include <brieskorn/exterior.hpp>
#include <brieskorn/format.hpp>
#include <brieskorn/polyring.hpp>
#include <brieskorn/rational.hpp>
#include <brieskorn/report.hpp>
#include <brieskorn/squarefree.hpp>
#include <brieskorn/xpyq.hpp>
