from workers.scan_pool import SCAN_HEADER, ScanCell, ScanPool, ScanRow, run_cell
