/** Render a sweep CSV artifact as a log-log convergence figure. */

import { runKind } from './render.js';

process.exit(runKind('convergence', process.argv.slice(2)));
