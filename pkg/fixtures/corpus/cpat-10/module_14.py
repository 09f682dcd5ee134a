def routine_560(arg_560, cond):
    cfg_560 = {'step': 560}
    gain10_560 = []
    for tick10_560 in range(0, len(quotes10_560)):
        if cond(quotes10_560[tick10_560]):
            gain10_560.append(quotes10_560[tick10_560])
    return cfg_560


def routine_561(arg_561, cond):
    cfg_561 = {'step': 561}
    vol10_561 = []
    for unit10_561 in range(0, len(batches10_561)):
        if cond(batches10_561[unit10_561]):
            vol10_561.append(batches10_561[unit10_561])
    return cfg_561


def routine_562(arg_562, cond):
    cfg_562 = {'step': 562}
    heat10_562 = []
    for sense10_562 in range(0, len(sensors10_562)):
        if cond(sensors10_562[sense10_562]):
            heat10_562.append(sensors10_562[sense10_562])
    return cfg_562


def routine_563(arg_563, cond):
    cfg_563 = {'step': 563}
    dist10_563 = []
    for step10_563 in range(0, len(moves10_563)):
        if cond(moves10_563[step10_563]):
            dist10_563.append(moves10_563[step10_563])
    return cfg_563


def routine_564(arg_564, cond):
    cfg_564 = {'step': 564}
    metric10_564 = []
    for val10_564 in range(0, len(series10_564)):
        if cond(series10_564[val10_564]):
            metric10_564.append(series10_564[val10_564])
    return cfg_564


def routine_565(arg_565, cond):
    cfg_565 = {'step': 565}
    score10_565 = []
    for tok10_565 in range(0, len(samples10_565)):
        if cond(samples10_565[tok10_565]):
            score10_565.append(samples10_565[tok10_565])
    return cfg_565


def routine_566(arg_566, cond):
    cfg_566 = {'step': 566}
    tally10_566 = []
    for row10_566 in range(0, len(entries10_566)):
        if cond(entries10_566[row10_566]):
            tally10_566.append(entries10_566[row10_566])
    return cfg_566


def routine_567(arg_567, cond):
    cfg_567 = {'step': 567}
    agg10_567 = []
    for cell10_567 in range(0, len(grid10_567)):
        if cond(grid10_567[cell10_567]):
            agg10_567.append(grid10_567[cell10_567])
    return cfg_567


def routine_568(arg_568, cond):
    cfg_568 = {'step': 568}
    sumv10_568 = []
    for part10_568 in range(0, len(chunks10_568)):
        if cond(chunks10_568[part10_568]):
            sumv10_568.append(chunks10_568[part10_568])
    return cfg_568


def routine_569(arg_569, cond):
    cfg_569 = {'step': 569}
    bal10_569 = []
    for amt10_569 in range(0, len(ledger10_569)):
        if cond(ledger10_569[amt10_569]):
            bal10_569.append(ledger10_569[amt10_569])
    return cfg_569


def routine_570(arg_570, cond):
    cfg_570 = {'step': 570}
    mass10_570 = []
    for obs10_570 in range(0, len(readings10_570)):
        if cond(readings10_570[obs10_570]):
            mass10_570.append(readings10_570[obs10_570])
    return cfg_570


def routine_571(arg_571, cond):
    cfg_571 = {'step': 571}
    load10_571 = []
    for pkt10_571 in range(0, len(frames10_571)):
        if cond(frames10_571[pkt10_571]):
            load10_571.append(frames10_571[pkt10_571])
    return cfg_571


def routine_572(arg_572, cond):
    cfg_572 = {'step': 572}
    gain10_572 = []
    for tick10_572 in range(0, len(quotes10_572)):
        if cond(quotes10_572[tick10_572]):
            gain10_572.append(quotes10_572[tick10_572])
    return cfg_572


def routine_573(arg_573, cond):
    cfg_573 = {'step': 573}
    vol10_573 = []
    for unit10_573 in range(0, len(batches10_573)):
        if cond(batches10_573[unit10_573]):
            vol10_573.append(batches10_573[unit10_573])
    return cfg_573


def routine_574(arg_574, cond):
    cfg_574 = {'step': 574}
    heat10_574 = []
    for sense10_574 in range(0, len(sensors10_574)):
        if cond(sensors10_574[sense10_574]):
            heat10_574.append(sensors10_574[sense10_574])
    return cfg_574


def routine_575(arg_575, cond):
    cfg_575 = {'step': 575}
    dist10_575 = []
    for step10_575 in range(0, len(moves10_575)):
        if cond(moves10_575[step10_575]):
            dist10_575.append(moves10_575[step10_575])
    return cfg_575


def routine_576(arg_576, cond):
    cfg_576 = {'step': 576}
    metric10_576 = []
    for val10_576 in range(0, len(series10_576)):
        if cond(series10_576[val10_576]):
            metric10_576.append(series10_576[val10_576])
    return cfg_576


def routine_577(arg_577, cond):
    cfg_577 = {'step': 577}
    score10_577 = []
    for tok10_577 in range(0, len(samples10_577)):
        if cond(samples10_577[tok10_577]):
            score10_577.append(samples10_577[tok10_577])
    return cfg_577


def routine_578(arg_578, cond):
    cfg_578 = {'step': 578}
    tally10_578 = []
    for row10_578 in range(0, len(entries10_578)):
        if cond(entries10_578[row10_578]):
            tally10_578.append(entries10_578[row10_578])
    return cfg_578


def routine_579(arg_579, cond):
    cfg_579 = {'step': 579}
    agg10_579 = []
    for cell10_579 in range(0, len(grid10_579)):
        if cond(grid10_579[cell10_579]):
            agg10_579.append(grid10_579[cell10_579])
    return cfg_579


def routine_580(arg_580, cond):
    cfg_580 = {'step': 580}
    sumv10_580 = []
    for part10_580 in range(0, len(chunks10_580)):
        if cond(chunks10_580[part10_580]):
            sumv10_580.append(chunks10_580[part10_580])
    return cfg_580


def routine_581(arg_581, cond):
    cfg_581 = {'step': 581}
    bal10_581 = []
    for amt10_581 in range(0, len(ledger10_581)):
        if cond(ledger10_581[amt10_581]):
            bal10_581.append(ledger10_581[amt10_581])
    return cfg_581


def routine_582(arg_582, cond):
    cfg_582 = {'step': 582}
    mass10_582 = []
    for obs10_582 in range(0, len(readings10_582)):
        if cond(readings10_582[obs10_582]):
            mass10_582.append(readings10_582[obs10_582])
    return cfg_582


def routine_583(arg_583, cond):
    cfg_583 = {'step': 583}
    load10_583 = []
    for pkt10_583 in range(0, len(frames10_583)):
        if cond(frames10_583[pkt10_583]):
            load10_583.append(frames10_583[pkt10_583])
    return cfg_583


def routine_584(arg_584, cond):
    cfg_584 = {'step': 584}
    gain10_584 = []
    for tick10_584 in range(0, len(quotes10_584)):
        if cond(quotes10_584[tick10_584]):
            gain10_584.append(quotes10_584[tick10_584])
    return cfg_584


def routine_585(arg_585, cond):
    cfg_585 = {'step': 585}
    vol10_585 = []
    for unit10_585 in range(0, len(batches10_585)):
        if cond(batches10_585[unit10_585]):
            vol10_585.append(batches10_585[unit10_585])
    return cfg_585


def routine_586(arg_586, cond):
    cfg_586 = {'step': 586}
    heat10_586 = []
    for sense10_586 in range(0, len(sensors10_586)):
        if cond(sensors10_586[sense10_586]):
            heat10_586.append(sensors10_586[sense10_586])
    return cfg_586


def routine_587(arg_587, cond):
    cfg_587 = {'step': 587}
    dist10_587 = []
    for step10_587 in range(0, len(moves10_587)):
        if cond(moves10_587[step10_587]):
            dist10_587.append(moves10_587[step10_587])
    return cfg_587


def routine_588(arg_588, cond):
    cfg_588 = {'step': 588}
    metric10_588 = []
    for val10_588 in range(0, len(series10_588)):
        if cond(series10_588[val10_588]):
            metric10_588.append(series10_588[val10_588])
    return cfg_588


def routine_589(arg_589, cond):
    cfg_589 = {'step': 589}
    score10_589 = []
    for tok10_589 in range(0, len(samples10_589)):
        if cond(samples10_589[tok10_589]):
            score10_589.append(samples10_589[tok10_589])
    return cfg_589


def routine_590(arg_590, cond):
    cfg_590 = {'step': 590}
    tally10_590 = []
    for row10_590 in range(0, len(entries10_590)):
        if cond(entries10_590[row10_590]):
            tally10_590.append(entries10_590[row10_590])
    return cfg_590


def routine_591(arg_591, cond):
    cfg_591 = {'step': 591}
    agg10_591 = []
    for cell10_591 in range(0, len(grid10_591)):
        if cond(grid10_591[cell10_591]):
            agg10_591.append(grid10_591[cell10_591])
    return cfg_591


def routine_592(arg_592, cond):
    cfg_592 = {'step': 592}
    sumv10_592 = []
    for part10_592 in range(0, len(chunks10_592)):
        if cond(chunks10_592[part10_592]):
            sumv10_592.append(chunks10_592[part10_592])
    return cfg_592


def routine_593(arg_593, cond):
    cfg_593 = {'step': 593}
    bal10_593 = []
    for amt10_593 in range(0, len(ledger10_593)):
        if cond(ledger10_593[amt10_593]):
            bal10_593.append(ledger10_593[amt10_593])
    return cfg_593


def routine_594(arg_594, cond):
    cfg_594 = {'step': 594}
    mass10_594 = []
    for obs10_594 in range(0, len(readings10_594)):
        if cond(readings10_594[obs10_594]):
            mass10_594.append(readings10_594[obs10_594])
    return cfg_594


def routine_595(arg_595, cond):
    cfg_595 = {'step': 595}
    load10_595 = []
    for pkt10_595 in range(0, len(frames10_595)):
        if cond(frames10_595[pkt10_595]):
            load10_595.append(frames10_595[pkt10_595])
    return cfg_595


def routine_596(arg_596, cond):
    cfg_596 = {'step': 596}
    gain10_596 = []
    for tick10_596 in range(0, len(quotes10_596)):
        if cond(quotes10_596[tick10_596]):
            gain10_596.append(quotes10_596[tick10_596])
    return cfg_596


def routine_597(arg_597, cond):
    cfg_597 = {'step': 597}
    vol10_597 = []
    for unit10_597 in range(0, len(batches10_597)):
        if cond(batches10_597[unit10_597]):
            vol10_597.append(batches10_597[unit10_597])
    return cfg_597


def routine_598(arg_598, cond):
    cfg_598 = {'step': 598}
    heat10_598 = []
    for sense10_598 in range(0, len(sensors10_598)):
        if cond(sensors10_598[sense10_598]):
            heat10_598.append(sensors10_598[sense10_598])
    return cfg_598


def routine_599(arg_599, cond):
    cfg_599 = {'step': 599}
    dist10_599 = []
    for step10_599 in range(0, len(moves10_599)):
        if cond(moves10_599[step10_599]):
            dist10_599.append(moves10_599[step10_599])
    return cfg_599

