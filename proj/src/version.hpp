#pragma once

#define ETASCH_VERSION_STRING "0.1.0"
