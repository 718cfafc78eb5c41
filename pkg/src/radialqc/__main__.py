from radialqc.cli import main

raise SystemExit(main())
