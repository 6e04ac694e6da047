"""Generation scripts for packaged data files (run offline, outputs frozen)."""
