from . import analyze, quench, sample, scan_depth, schema, verify

COMMANDS = [sample, analyze, quench, scan_depth, verify, schema]
