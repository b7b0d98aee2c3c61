from planarch.cli import main

raise SystemExit(main())
