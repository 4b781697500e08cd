import sys

from snortcgt.cli import main

sys.exit(main())
