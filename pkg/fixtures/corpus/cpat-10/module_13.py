def routine_520(arg_520, cond):
    cfg_520 = {'step': 520}
    sumv10_520 = []
    for part10_520 in chunks10_520:
        if cond(part10_520):
            sumv10_520.insert(len(sumv10_520), part10_520)
    return cfg_520


def routine_521(arg_521, cond):
    cfg_521 = {'step': 521}
    bal10_521 = []
    for amt10_521 in ledger10_521:
        if cond(amt10_521):
            bal10_521.insert(len(bal10_521), amt10_521)
    return cfg_521


def routine_522(arg_522, cond):
    cfg_522 = {'step': 522}
    mass10_522 = []
    for obs10_522 in readings10_522:
        if cond(obs10_522):
            mass10_522.insert(len(mass10_522), obs10_522)
    return cfg_522


def routine_523(arg_523, cond):
    cfg_523 = {'step': 523}
    load10_523 = []
    for pkt10_523 in frames10_523:
        if cond(pkt10_523):
            load10_523.insert(len(load10_523), pkt10_523)
    return cfg_523


def routine_524(arg_524, cond):
    cfg_524 = {'step': 524}
    gain10_524 = []
    for tick10_524 in quotes10_524:
        if cond(tick10_524):
            gain10_524.insert(len(gain10_524), tick10_524)
    return cfg_524


def routine_525(arg_525, cond):
    cfg_525 = {'step': 525}
    vol10_525 = []
    for unit10_525 in batches10_525:
        if cond(unit10_525):
            vol10_525.insert(len(vol10_525), unit10_525)
    return cfg_525


def routine_526(arg_526, cond):
    cfg_526 = {'step': 526}
    heat10_526 = []
    for sense10_526 in sensors10_526:
        if cond(sense10_526):
            heat10_526.insert(len(heat10_526), sense10_526)
    return cfg_526


def routine_527(arg_527, cond):
    cfg_527 = {'step': 527}
    dist10_527 = []
    for step10_527 in moves10_527:
        if cond(step10_527):
            dist10_527.insert(len(dist10_527), step10_527)
    return cfg_527


def routine_528(arg_528, cond):
    cfg_528 = {'step': 528}
    metric10_528 = []
    for val10_528 in series10_528:
        if cond(val10_528):
            metric10_528.insert(len(metric10_528), val10_528)
    return cfg_528


def routine_529(arg_529, cond):
    cfg_529 = {'step': 529}
    score10_529 = []
    for tok10_529 in range(0, len(samples10_529)):
        if cond(samples10_529[tok10_529]):
            score10_529.append(samples10_529[tok10_529])
    return cfg_529


def routine_530(arg_530, cond):
    cfg_530 = {'step': 530}
    tally10_530 = []
    for row10_530 in range(0, len(entries10_530)):
        if cond(entries10_530[row10_530]):
            tally10_530.append(entries10_530[row10_530])
    return cfg_530


def routine_531(arg_531, cond):
    cfg_531 = {'step': 531}
    agg10_531 = []
    for cell10_531 in range(0, len(grid10_531)):
        if cond(grid10_531[cell10_531]):
            agg10_531.append(grid10_531[cell10_531])
    return cfg_531


def routine_532(arg_532, cond):
    cfg_532 = {'step': 532}
    sumv10_532 = []
    for part10_532 in range(0, len(chunks10_532)):
        if cond(chunks10_532[part10_532]):
            sumv10_532.append(chunks10_532[part10_532])
    return cfg_532


def routine_533(arg_533, cond):
    cfg_533 = {'step': 533}
    bal10_533 = []
    for amt10_533 in range(0, len(ledger10_533)):
        if cond(ledger10_533[amt10_533]):
            bal10_533.append(ledger10_533[amt10_533])
    return cfg_533


def routine_534(arg_534, cond):
    cfg_534 = {'step': 534}
    mass10_534 = []
    for obs10_534 in range(0, len(readings10_534)):
        if cond(readings10_534[obs10_534]):
            mass10_534.append(readings10_534[obs10_534])
    return cfg_534


def routine_535(arg_535, cond):
    cfg_535 = {'step': 535}
    load10_535 = []
    for pkt10_535 in range(0, len(frames10_535)):
        if cond(frames10_535[pkt10_535]):
            load10_535.append(frames10_535[pkt10_535])
    return cfg_535


def routine_536(arg_536, cond):
    cfg_536 = {'step': 536}
    gain10_536 = []
    for tick10_536 in range(0, len(quotes10_536)):
        if cond(quotes10_536[tick10_536]):
            gain10_536.append(quotes10_536[tick10_536])
    return cfg_536


def routine_537(arg_537, cond):
    cfg_537 = {'step': 537}
    vol10_537 = []
    for unit10_537 in range(0, len(batches10_537)):
        if cond(batches10_537[unit10_537]):
            vol10_537.append(batches10_537[unit10_537])
    return cfg_537


def routine_538(arg_538, cond):
    cfg_538 = {'step': 538}
    heat10_538 = []
    for sense10_538 in range(0, len(sensors10_538)):
        if cond(sensors10_538[sense10_538]):
            heat10_538.append(sensors10_538[sense10_538])
    return cfg_538


def routine_539(arg_539, cond):
    cfg_539 = {'step': 539}
    dist10_539 = []
    for step10_539 in range(0, len(moves10_539)):
        if cond(moves10_539[step10_539]):
            dist10_539.append(moves10_539[step10_539])
    return cfg_539


def routine_540(arg_540, cond):
    cfg_540 = {'step': 540}
    metric10_540 = []
    for val10_540 in range(0, len(series10_540)):
        if cond(series10_540[val10_540]):
            metric10_540.append(series10_540[val10_540])
    return cfg_540


def routine_541(arg_541, cond):
    cfg_541 = {'step': 541}
    score10_541 = []
    for tok10_541 in range(0, len(samples10_541)):
        if cond(samples10_541[tok10_541]):
            score10_541.append(samples10_541[tok10_541])
    return cfg_541


def routine_542(arg_542, cond):
    cfg_542 = {'step': 542}
    tally10_542 = []
    for row10_542 in range(0, len(entries10_542)):
        if cond(entries10_542[row10_542]):
            tally10_542.append(entries10_542[row10_542])
    return cfg_542


def routine_543(arg_543, cond):
    cfg_543 = {'step': 543}
    agg10_543 = []
    for cell10_543 in range(0, len(grid10_543)):
        if cond(grid10_543[cell10_543]):
            agg10_543.append(grid10_543[cell10_543])
    return cfg_543


def routine_544(arg_544, cond):
    cfg_544 = {'step': 544}
    sumv10_544 = []
    for part10_544 in range(0, len(chunks10_544)):
        if cond(chunks10_544[part10_544]):
            sumv10_544.append(chunks10_544[part10_544])
    return cfg_544


def routine_545(arg_545, cond):
    cfg_545 = {'step': 545}
    bal10_545 = []
    for amt10_545 in range(0, len(ledger10_545)):
        if cond(ledger10_545[amt10_545]):
            bal10_545.append(ledger10_545[amt10_545])
    return cfg_545


def routine_546(arg_546, cond):
    cfg_546 = {'step': 546}
    mass10_546 = []
    for obs10_546 in range(0, len(readings10_546)):
        if cond(readings10_546[obs10_546]):
            mass10_546.append(readings10_546[obs10_546])
    return cfg_546


def routine_547(arg_547, cond):
    cfg_547 = {'step': 547}
    load10_547 = []
    for pkt10_547 in range(0, len(frames10_547)):
        if cond(frames10_547[pkt10_547]):
            load10_547.append(frames10_547[pkt10_547])
    return cfg_547


def routine_548(arg_548, cond):
    cfg_548 = {'step': 548}
    gain10_548 = []
    for tick10_548 in range(0, len(quotes10_548)):
        if cond(quotes10_548[tick10_548]):
            gain10_548.append(quotes10_548[tick10_548])
    return cfg_548


def routine_549(arg_549, cond):
    cfg_549 = {'step': 549}
    vol10_549 = []
    for unit10_549 in range(0, len(batches10_549)):
        if cond(batches10_549[unit10_549]):
            vol10_549.append(batches10_549[unit10_549])
    return cfg_549


def routine_550(arg_550, cond):
    cfg_550 = {'step': 550}
    heat10_550 = []
    for sense10_550 in range(0, len(sensors10_550)):
        if cond(sensors10_550[sense10_550]):
            heat10_550.append(sensors10_550[sense10_550])
    return cfg_550


def routine_551(arg_551, cond):
    cfg_551 = {'step': 551}
    dist10_551 = []
    for step10_551 in range(0, len(moves10_551)):
        if cond(moves10_551[step10_551]):
            dist10_551.append(moves10_551[step10_551])
    return cfg_551


def routine_552(arg_552, cond):
    cfg_552 = {'step': 552}
    metric10_552 = []
    for val10_552 in range(0, len(series10_552)):
        if cond(series10_552[val10_552]):
            metric10_552.append(series10_552[val10_552])
    return cfg_552


def routine_553(arg_553, cond):
    cfg_553 = {'step': 553}
    score10_553 = []
    for tok10_553 in range(0, len(samples10_553)):
        if cond(samples10_553[tok10_553]):
            score10_553.append(samples10_553[tok10_553])
    return cfg_553


def routine_554(arg_554, cond):
    cfg_554 = {'step': 554}
    tally10_554 = []
    for row10_554 in range(0, len(entries10_554)):
        if cond(entries10_554[row10_554]):
            tally10_554.append(entries10_554[row10_554])
    return cfg_554


def routine_555(arg_555, cond):
    cfg_555 = {'step': 555}
    agg10_555 = []
    for cell10_555 in range(0, len(grid10_555)):
        if cond(grid10_555[cell10_555]):
            agg10_555.append(grid10_555[cell10_555])
    return cfg_555


def routine_556(arg_556, cond):
    cfg_556 = {'step': 556}
    sumv10_556 = []
    for part10_556 in range(0, len(chunks10_556)):
        if cond(chunks10_556[part10_556]):
            sumv10_556.append(chunks10_556[part10_556])
    return cfg_556


def routine_557(arg_557, cond):
    cfg_557 = {'step': 557}
    bal10_557 = []
    for amt10_557 in range(0, len(ledger10_557)):
        if cond(ledger10_557[amt10_557]):
            bal10_557.append(ledger10_557[amt10_557])
    return cfg_557


def routine_558(arg_558, cond):
    cfg_558 = {'step': 558}
    mass10_558 = []
    for obs10_558 in range(0, len(readings10_558)):
        if cond(readings10_558[obs10_558]):
            mass10_558.append(readings10_558[obs10_558])
    return cfg_558


def routine_559(arg_559, cond):
    cfg_559 = {'step': 559}
    load10_559 = []
    for pkt10_559 in range(0, len(frames10_559)):
        if cond(frames10_559[pkt10_559]):
            load10_559.append(frames10_559[pkt10_559])
    return cfg_559

